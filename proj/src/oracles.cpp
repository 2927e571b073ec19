#include "gct/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gct {

namespace {

double log_choose(long long n, long long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(double(n + 1)) - std::lgamma(double(k + 1)) -
           std::lgamma(double(n - k + 1));
}

void check_params(const HypergeomParams& p) {
    if (p.N < 0 || p.K < 0 || p.K > p.N || p.draws < 0 || p.draws > p.N ||
        p.theta < 0)
        throw std::invalid_argument("hypergeometric: invalid parameters");
}

// Visit every m-subset of {0..n-1}; f receives the subset as a Bitset.
template <typename F>
void for_each_subset(int n, int m, F&& f) {
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    Bitset S(n);
    if (m == 0) {
        f(S);
        return;
    }
    if (m > n) return;
    while (true) {
        S.clear();
        for (int i : idx) S.set(i);
        f(S);
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > kExhaustiveCap * 100) return kExhaustiveCap * 100;  // saturate
        r = r * (n - k + i) / i;
    }
    return r;
}

DistanceReport distance_to_indep_set(const Graph& g, int m) {
    if (m < 0 || m > g.n())
        throw std::invalid_argument("distance_to_indep_set: need 0 <= m <= n");
    if (binomial(g.n(), m) > kExhaustiveCap)
        throw std::invalid_argument(
            "distance_to_indep_set: binomial(n,m) above exhaustive cap; "
            "certify farness analytically instead");
    DistanceReport rep;
    rep.property = "indep_set(" + std::to_string(m) + ")";
    long long best = std::numeric_limits<long long>::max();
    Bitset best_set(g.n());
    for_each_subset(g.n(), m, [&](const Bitset& S) {
        long long e = g.edges_within(S);
        if (e < best) {
            best = e;
            best_set = S;
        }
    });
    rep.edit_count = best;
    rep.epsilon_equivalent = g.n() ? double(best) / (double(g.n()) * g.n()) : 0.0;
    rep.witness_set = VertexSet::from_bits(best_set);
    return rep;
}

DistanceReport distance_to_clique(const Graph& g, int m) {
    DistanceReport rep = distance_to_indep_set(complement(g), m);
    rep.property = "clique(" + std::to_string(m) + ")";
    return rep;
}

DistanceReport distance_to_k_colorable(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("distance_to_k_colorable: need k >= 1");
    int n = g.n();
    double combos = n > 0 ? std::pow(double(k), n - 1) : 1.0;
    if (combos > double(kExhaustiveCap))
        throw std::invalid_argument(
            "distance_to_k_colorable: k^(n-1) above exhaustive cap; "
            "certify farness analytically instead");
    DistanceReport rep;
    rep.property = "k_colorable(" + std::to_string(k) + ")";
    if (n == 0) return rep;

    std::vector<int> color(n, 0);  // vertex 0 pinned to color 0
    std::vector<int> best_color = color;
    long long best = std::numeric_limits<long long>::max();
    while (true) {
        long long mono = 0;
        for (int u = 0; u < n && mono < best; ++u)
            for (int v = g.neighbors(u).next_after(u); v >= 0;
                 v = g.neighbors(u).next_after(v))
                if (color[u] == color[v]) ++mono;
        if (mono < best) {
            best = mono;
            best_color = color;
        }
        int i = n - 1;
        while (i >= 1 && color[i] == k - 1) color[i--] = 0;
        if (i < 1) break;
        ++color[i];
    }
    rep.edit_count = best;
    rep.epsilon_equivalent = double(best) / (double(n) * n);
    rep.witness_partition = best_color;
    return rep;
}

long long complete_graph_indep_set_distance(int n, int m) {
    // Every m-subset of K_n spans exactly C(m,2) edges.
    (void)n;
    return (long long)m * (m - 1) / 2;
}

long long complete_graph_k_colorable_distance(int n, int k) {
    // Balanced partition minimizes sum of C(part,2) over parts.
    if (k >= n) return 0;
    long long q = n / k, r = n % k;
    return r * (q + 1) * q / 2 + (k - r) * q * (q - 1) / 2;
}

double hypergeometric_tail(const HypergeomParams& p) {
    check_params(p);
    long long lo = std::max({p.theta, 0LL, p.draws - (p.N - p.K)});
    long long hi = std::min(p.draws, p.K);
    double denom = log_choose(p.N, p.draws);
    double sum = 0.0;
    for (long long x = hi; x >= lo; --x)  // smallest terms first
        sum += std::exp(log_choose(p.K, x) + log_choose(p.N - p.K, p.draws - x) -
                        denom);
    return std::min(sum, 1.0);
}

double chernoff_bound(const HypergeomParams& p) {
    check_params(p);
    double mean = p.N > 0 ? double(p.draws) * p.K / p.N : 0.0;
    double theta = double(p.theta);
    if (theta < mean - 1e-12)
        throw std::invalid_argument("chernoff_bound: theta below E[X]");
    if (theta + mean == 0.0) return 1.0;
    double d = theta - mean;
    return std::exp(-d * d / (theta + mean));
}

bool hypergeometric_median_check(long long N, long long K, long long draws) {
    HypergeomParams p{N, K, draws, 0};
    check_params(p);
    if (N == 0) return true;
    p.theta = draws * K / N;  // floor of the mean
    return hypergeometric_tail(p) >= 0.5;
}

}  // namespace gct
