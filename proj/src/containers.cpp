#include "gct/containers.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace gct {

namespace {

// Lemma right-hand sides are real-valued; cardinalities are exact. A small
// relative slack keeps exact boundary cases from failing in double math.
constexpr double kRelSlack = 1e-9;

bool leq_slack(double a, double b) {
    return a <= b + kRelSlack * std::max(1.0, std::fabs(b));
}

int ceil_real(double x) { return int(std::ceil(x - 1e-12)); }

}  // namespace

const VertexSet& ContainerTrace::fingerprint(int t) const {
    if (t < 0) throw std::invalid_argument("fingerprint: negative index");
    if (t == 0) return empty_set_;
    if (t > steps()) return source_;
    return fingerprints_[t - 1];
}

const VertexSet& ContainerTrace::container(int t) const {
    if (t < 0) throw std::invalid_argument("container: negative index");
    if (t == 0) return full_set_;
    if (t > steps()) return source_;
    return containers_[t - 1];
}

ContainerTrace generate_trace(const Graph& g, const VertexSet& I) {
    if (I.ground_size() != g.n())
        throw std::invalid_argument("generate_trace: ground set mismatch");
    auto [eu, ev] = g.find_internal_edge(I);
    if (eu >= 0)
        throw std::invalid_argument("generate_trace: input set is not independent, "
                                    "contains edge (" + std::to_string(eu) + "," +
                                    std::to_string(ev) + ")");

    ContainerTrace tr;
    tr.source_ = I;
    tr.full_set_ = VertexSet::full(g.n());
    tr.empty_set_ = VertexSet(g.n());

    Bitset container = tr.full_set_.bits();
    Bitset remaining = I.bits();  // I \ F_{t-1}
    VertexSet fingerprint(g.n());

    while (remaining.any()) {
        // v_t: max degree in G[C_{t-1}] among I \ F_{t-1}, ties to lowest id.
        int vt = -1, vt_deg = -1;
        for (int v = remaining.first(); v >= 0; v = remaining.next_after(v)) {
            int d = g.degree_in(v, container);
            if (d > vt_deg) {
                vt_deg = d;
                vt = v;
            }
        }

        // Expulsion uses degrees measured in G[C_{t-1}] for every w.
        Bitset next = container;
        next.andnot(g.neighbors(vt));
        for (int w = next.first(); w >= 0; w = next.next_after(w))
            if (g.degree_in(w, container) > vt_deg) next.reset(w);

        fingerprint.add(vt);
        remaining.reset(vt);
        container = next;
        tr.chosen_.push_back(vt);
        tr.fingerprints_.push_back(fingerprint);
        tr.containers_.push_back(VertexSet::from_bits(container));
    }
    return tr;
}

VertexSet container_of_fingerprint(const Graph& g, const VertexSet& F, int t) {
    return generate_trace(g, F).container(t);
}

bool check_degree_bound(const Graph& g, const ContainerTrace& trace) {
    long long n = g.n();
    for (int t = 1; t <= trace.steps(); ++t) {
        const Bitset& C = trace.container(t).bits();
        for (int v = C.first(); v >= 0; v = C.next_after(v))
            if ((long long)t * g.degree_in(v, C) > n) return false;
    }
    return true;
}

LemmaReport find_small_container(const Graph& g, const VertexSet& I, double rho,
                                 double eps) {
    if (eps <= 0 || rho <= 0 || 2 * rho / eps <= 1)
        throw std::invalid_argument("find_small_container: need 0 < eps < 2*rho");
    ContainerTrace trace = generate_trace(g, I);
    double n = g.n();
    double log_term = std::log(2 * rho / eps);
    LemmaReport rep;
    rep.t_limit = ceil_real(8 * rho * rho / eps * log_term);
    double edge_cap = eps * n * n;
    for (int t = 1; t <= rep.t_limit; ++t) {
        const VertexSet& C = trace.container(t);
        double bound = (rho - t * eps / (8 * rho * log_term)) * n;
        long long edges = g.edges_within(C.bits());
        if (leq_slack(C.size(), bound) && leq_slack(double(edges), edge_cap)) {
            rep.satisfied = true;
            rep.witness_t = t;
            rep.witness_size = C.size();
            rep.bound_value = bound;
            rep.edges_in_container = edges;
            return rep;
        }
        rep.bound_value = bound;
    }
    return rep;
}

std::vector<ShrinkStep> verify_shrinking(const Graph& g, const ContainerTrace& trace,
                                         const VertexSet& C, double rho, double eps) {
    double n = g.n();
    double alpha = rho - C.size() / n;
    if (alpha <= 0)
        throw std::invalid_argument("verify_shrinking: |C| >= rho*n, alpha <= 0");
    long long c_edges = g.edges_within(C.bits());
    if (!leq_slack(double(c_edges), eps / 4 * n * n))
        throw std::invalid_argument("verify_shrinking: G[C] has " +
                                    std::to_string(c_edges) +
                                    " edges, above the (eps/4)n^2 hypothesis");
    double ratio = 1.0 - eps / (4 * rho * alpha);

    std::vector<ShrinkStep> out;
    for (int t = 0; t < trace.steps(); ++t) {
        const Bitset& Ct = trace.container(t).bits();
        if (double(Ct.count()) < rho * n - kRelSlack) continue;  // outside hypothesis
        const Bitset& Cnext = trace.container(t + 1).bits();
        if (!C.bits().is_subset_of(Cnext))
            throw std::invalid_argument("verify_shrinking: C not contained in C_{t+1} "
                                        "at t=" + std::to_string(t));
        Bitset before = Ct;
        before.andnot(C.bits());
        Bitset after = Cnext;
        after.andnot(C.bits());
        ShrinkStep step{t, false, before.count(), after.count()};
        step.ok = leq_slack(double(step.after), ratio * step.before);
        out.push_back(step);
    }
    return out;
}

LemmaReport find_small_union(const Graph& g, const std::vector<VertexSet>& sets,
                             double eps) {
    if (sets.empty()) throw std::invalid_argument("find_small_union: no sets given");
    if (!(eps > 0 && eps < std::exp(-2.0)))
        throw std::invalid_argument("find_small_union: requires 0 < eps < e^-2");
    std::vector<ContainerTrace> traces;
    traces.reserve(sets.size());
    for (const auto& I : sets) traces.push_back(generate_trace(g, I));

    double n = g.n();
    double denom = 4 * std::log(1.0 / eps);
    LemmaReport rep;
    rep.t_limit = ceil_real(4.0 / eps);
    for (int t = 1; t <= rep.t_limit; ++t) {
        Bitset uni(g.n());
        for (const auto& tr : traces) uni |= tr.container(t).bits();
        double bound = (1.0 - t * eps / denom) * n;
        if (leq_slack(uni.count(), bound)) {
            rep.satisfied = true;
            rep.witness_t = t;
            rep.witness_size = uni.count();
            rep.bound_value = bound;
            return rep;
        }
        rep.bound_value = bound;
    }
    return rep;
}

PartitionResult container_partition(const Graph& g, const std::vector<VertexSet>& sets,
                                    int t_max) {
    if (sets.empty()) throw std::invalid_argument("container_partition: no sets given");
    if (t_max < 1) throw std::invalid_argument("container_partition: need t_max >= 1");
    const int k = int(sets.size());
    std::vector<ContainerTrace> traces;
    traces.reserve(k);
    for (const auto& I : sets) traces.push_back(generate_trace(g, I));

    // V_i = C_{t_max}(I_i); overlaps kept by the lowest-index part.
    std::vector<Bitset> parts;
    Bitset assigned(g.n());
    for (int i = 0; i < k; ++i) {
        Bitset p = traces[i].container(t_max).bits();
        p.andnot(assigned);
        assigned |= p;
        parts.push_back(std::move(p));
    }

    // Leftover layers A_t = union(C_{t-1}) \ union(C_t), processed from
    // t_max down to 1; each vertex goes to the lowest i with v in C_{t-1}(I_i).
    for (int t = t_max; t >= 1; --t) {
        Bitset prev_union(g.n()), cur_union(g.n());
        for (const auto& tr : traces) {
            prev_union |= tr.container(t - 1).bits();
            cur_union |= tr.container(t).bits();
        }
        Bitset layer = prev_union;
        layer.andnot(cur_union);
        for (int v = layer.first(); v >= 0; v = layer.next_after(v)) {
            int home = -1;
            for (int i = 0; i < k; ++i)
                if (traces[i].container(t - 1).bits().test(v)) {
                    home = i;
                    break;
                }
            if (home < 0)
                throw std::logic_error("container_partition: vertex in no container");
            parts[home].set(v);
            assigned.set(v);
        }
    }

    if (assigned.count() != g.n())
        throw std::logic_error("container_partition: output does not cover V");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (parts[i].intersects(parts[j]))
                throw std::logic_error("container_partition: parts overlap");

    PartitionResult res;
    for (auto& p : parts) {
        res.monochromatic_edges += g.edges_within(p);
        res.parts.push_back(VertexSet::from_bits(std::move(p)));
    }
    return res;
}

void dump_trace(std::ostream& out, const ContainerTrace& trace, bool members) {
    for (int t = 1; t <= trace.steps(); ++t) {
        out << t << ' ' << trace.chosen()[t - 1] << ' ' << trace.fingerprint(t).size()
            << ' ' << trace.container(t).size();
        if (members) {
            out << " F=";
            for (int v : trace.fingerprint(t).to_vector()) out << v << ',';
            out << " C=";
            for (int v : trace.container(t).to_vector()) out << v << ',';
        }
        out << '\n';
    }
}

}  // namespace gct
