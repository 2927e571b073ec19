#include "gct/exact.hpp"

#include <stdexcept>

#include "gct/rng.hpp"

namespace gct {

namespace {

// Upper bound on the largest independent set inside P: size of a greedy
// clique cover (each clique contributes at most one IS vertex).
int clique_cover_bound(const Graph& g, const Bitset& P) {
    std::vector<Bitset> common;  // per clique: vertices adjacent to all members
    int bound = 0;
    for (int v = P.first(); v >= 0; v = P.next_after(v)) {
        bool placed = false;
        for (auto& c : common) {
            if (c.test(v)) {
                c &= g.neighbors(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            common.push_back(g.neighbors(v));
            ++bound;
        }
    }
    return bound;
}

int max_degree_vertex_in(const Graph& g, const Bitset& P) {
    int best = -1, best_deg = -1;
    for (int v = P.first(); v >= 0; v = P.next_after(v)) {
        int d = g.degree_in(v, P);
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    }
    return best;
}

bool bnb_search(const Graph& g, Bitset P, std::vector<int>& cur, int m,
                std::vector<int>& out) {
    if (int(cur.size()) >= m) {
        out = cur;
        return true;
    }
    int avail = P.count();
    if (int(cur.size()) + avail < m) return false;
    if (int(cur.size()) + clique_cover_bound(g, P) < m) return false;

    // Branch on the highest-degree remaining vertex.
    int v = max_degree_vertex_in(g, P);
    Bitset with = P;
    with.reset(v);
    with.andnot(g.neighbors(v));
    cur.push_back(v);
    if (bnb_search(g, with, cur, m, out)) return true;
    cur.pop_back();
    P.reset(v);
    return bnb_search(g, P, cur, m, out);
}

// Min-degree greedy lower bound; on planted instances this usually
// recovers the planted set outright and skips the search.
std::vector<int> greedy_min_degree_is(const Graph& g) {
    Bitset P(g.n());
    P.set_all();
    std::vector<int> is;
    while (P.any()) {
        int best = -1, best_deg = g.n() + 1;
        for (int v = P.first(); v >= 0; v = P.next_after(v)) {
            int d = g.degree_in(v, P);
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        is.push_back(best);
        P.reset(best);
        P.andnot(g.neighbors(best));
    }
    return is;
}

}  // namespace

IndepSetResult max_independent_set_at_least(const Graph& g, int m) {
    if (m < 0 || m > g.n())
        throw std::invalid_argument("max_independent_set_at_least: need 0 <= m <= n");
    IndepSetResult r;
    if (m == 0) {
        r.found = true;
        r.witness = VertexSet(g.n());
        return r;
    }
    std::vector<int> found = greedy_min_degree_is(g);
    if (int(found.size()) < m) {
        Bitset P(g.n());
        P.set_all();
        std::vector<int> cur;
        found.clear();
        if (!bnb_search(g, P, cur, m, found)) return r;
    }
    VertexSet w(g.n(), found);
    if (!g.is_independent(w))
        throw std::logic_error("max_independent_set_at_least: witness not independent");
    r.found = true;
    r.witness = std::move(w);
    return r;
}

IndepSetResult max_clique_at_least(const Graph& g, int m) {
    return max_independent_set_at_least(complement(g), m);
}

namespace {

struct ColorState {
    const Graph* g;
    int k;
    std::vector<int> color;            // -1 = uncolored
    std::vector<Bitset> forbidden;     // per vertex, colors used by neighbors
    std::vector<int> saturation;

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g->n(); ++v) {
            if (color[v] >= 0) continue;
            int d = g->degree(v);
            if (saturation[v] > best_sat ||
                (saturation[v] == best_sat && d > best_deg)) {
                best = v;
                best_sat = saturation[v];
                best_deg = d;
            }
        }
        return best;
    }

    bool solve(int colored, int max_used) {
        if (colored == g->n()) return true;
        int v = pick();
        // New-color symmetry break: never open color c+2 before c+1.
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (forbidden[v].test(c)) continue;
            color[v] = c;
            std::vector<int> touched;
            for (int u = g->neighbors(v).first(); u >= 0;
                 u = g->neighbors(v).next_after(u)) {
                if (color[u] >= 0 || forbidden[u].test(c)) continue;
                forbidden[u].set(c);
                ++saturation[u];
                touched.push_back(u);
            }
            if (solve(colored + 1, std::max(max_used, c))) return true;
            for (int u : touched) {
                forbidden[u].reset(c);
                --saturation[u];
            }
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace

ColoringResult is_k_colorable(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_k_colorable: need k >= 1");
    ColoringResult r;
    if (g.n() == 0) {
        r.colorable = true;
        r.witness = std::vector<int>{};
        return r;
    }
    ColorState st{&g, k, std::vector<int>(g.n(), -1),
                  std::vector<Bitset>(g.n(), Bitset(k)),
                  std::vector<int>(g.n(), 0)};
    if (!st.solve(0, -1)) return r;
    if (!g.is_proper_coloring(st.color))
        throw std::logic_error("is_k_colorable: witness coloring has a bad edge");
    r.colorable = true;
    r.witness = std::move(st.color);
    return r;
}

VertexSet greedy_maximal_independent_set(const Graph& g, const std::vector<int>& order) {
    VertexSet is(g.n());
    for (int v : order)
        if (!g.neighbors(v).intersects(is.bits())) is.add(v);
    return is;
}

VertexSet random_maximal_independent_set(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    for (int i = 0; i + 1 < g.n(); ++i) {
        int j = i + int(rng.below(std::uint64_t(g.n() - i)));
        std::swap(order[i], order[j]);
    }
    return greedy_maximal_independent_set(g, order);
}

namespace {

// Bron-Kerbosch with pivoting over the complement adjacency: maximal
// cliques of the complement are exactly the maximal independent sets of G.
void bron_kerbosch(const std::vector<Bitset>& nb, Bitset R, Bitset P, Bitset X,
                   std::vector<VertexSet>& out) {
    if (P.none() && X.none()) {
        out.push_back(VertexSet::from_bits(R));
        return;
    }
    Bitset PX = P | X;
    int pivot = -1, best = -1;
    for (int u = PX.first(); u >= 0; u = PX.next_after(u)) {
        int d = P.count_and(nb[u]);
        if (d > best) {
            best = d;
            pivot = u;
        }
    }
    Bitset cand = P;
    cand.andnot(nb[pivot]);
    for (int v = cand.first(); v >= 0; v = cand.next_after(v)) {
        Bitset R2 = R;
        R2.set(v);
        bron_kerbosch(nb, R2, P & nb[v], X & nb[v], out);
        P.reset(v);
        X.set(v);
    }
}

}  // namespace

std::vector<VertexSet> all_maximal_independent_sets(const Graph& g, int max_n) {
    if (g.n() > max_n)
        throw std::invalid_argument(
            "all_maximal_independent_sets: n=" + std::to_string(g.n()) +
            " exceeds cap " + std::to_string(max_n));
    std::vector<Bitset> nb(g.n(), Bitset(g.n()));
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (u != v && !g.adjacent(u, v)) nb[u].set(v);
    std::vector<VertexSet> out;
    Bitset P(g.n());
    P.set_all();
    if (g.n() == 0) return out;
    bron_kerbosch(nb, Bitset(g.n()), P, Bitset(g.n()), out);
    return out;
}

}  // namespace gct
