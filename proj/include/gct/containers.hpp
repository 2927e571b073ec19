#pragma once

#include <iosfwd>
#include <vector>

#include "gct/graph.hpp"

namespace gct {

// Full run of the fingerprint & container generator on (G, I): the chosen
// vertices v_1..v_|I| together with the fingerprint and container chains
//   F_1 c= ... c= F_|I| = I c= C_|I| c= ... c= C_1 c= C_0 = V.
// For t > |I| the accessors return F_t = C_t = I.
class ContainerTrace {
public:
    const VertexSet& source_set() const { return source_; }
    int steps() const { return int(chosen_.size()); }
    const std::vector<int>& chosen() const { return chosen_; }

    // t in [0, steps]; t beyond the stored chain yields I for both.
    const VertexSet& fingerprint(int t) const;
    const VertexSet& container(int t) const;

    friend ContainerTrace generate_trace(const Graph& g, const VertexSet& I);

private:
    VertexSet source_;
    VertexSet full_set_;  // ground set, serves as C_0
    VertexSet empty_set_; // F_0
    std::vector<int> chosen_;
    std::vector<VertexSet> fingerprints_;  // index t-1 holds F_t
    std::vector<VertexSet> containers_;    // index t-1 holds C_t
};

// Runs the greedy generator. At step t the vertex v_t is the member of
// I \ F_{t-1} with the largest degree in G[C_{t-1}] (ties to the smallest
// id); C_t drops the neighbors of v_t and every vertex of strictly larger
// degree in G[C_{t-1}]. Throws if I is not independent, naming an
// offending edge.
ContainerTrace generate_trace(const Graph& g, const VertexSet& I);

// C_t of the set F treated as its own independent set; by the closure
// property this equals C_t(I) whenever F is the t-th fingerprint of I.
VertexSet container_of_fingerprint(const Graph& g, const VertexSet& F, int t);

// Degree property: t * max_degree(G[C_t]) <= n for every t >= 1
// (exact integer comparison).
bool check_degree_bound(const Graph& g, const ContainerTrace& trace);

// Outcome of a container-lemma search.
struct LemmaReport {
    bool satisfied = false;
    int witness_t = -1;
    int witness_size = -1;          // |C_t| or |union of C_t(I_i)|
    double bound_value = 0.0;       // right-hand side at witness_t (or last t tried)
    long long edges_in_container = -1;  // size-bound lemma only
    int t_limit = 0;                // search range that was scanned
};

// Size-bound container lemma: for G epsilon-far from having an independent
// set of ceil(rho*n) vertices, scans t = 1..ceil((8 rho^2/eps) ln(2 rho/eps))
// for the first container with |C_t| <= (rho - t*eps/(8 rho ln(2 rho/eps)))*n
// and at most eps*n^2 internal edges. Farness is the caller's obligation.
LemmaReport find_small_container(const Graph& g, const VertexSet& I, double rho,
                                 double eps);

// Per-step shrinking ratio check against a sparse core C:
// for each step t with |C_t| >= rho*n, tests
//   |C_{t+1} \ C| <= (1 - eps/(4 rho alpha)) * |C_t \ C|
// where alpha = rho - |C|/n. Hypothesis violations (C not inside C_{t+1},
// alpha <= 0, C too dense) throw with a diagnostic.
struct ShrinkStep {
    int t;
    bool ok;
    int before;  // |C_t \ C|
    int after;   // |C_{t+1} \ C|
};
std::vector<ShrinkStep> verify_shrinking(const Graph& g, const ContainerTrace& trace,
                                         const VertexSet& C, double rho, double eps);

// Union-bound container lemma: for G epsilon-far from k-colorable and
// eps < e^-2, scans t = 1..ceil(4/eps) for the first t with
// |union_i C_t(I_i)| <= (1 - t*eps/(4 ln(1/eps)))*n.
LemmaReport find_small_union(const Graph& g, const std::vector<VertexSet>& sets,
                             double eps);

// The constructive k-partition from the union lemma's contrapositive:
// start from V_i = C_{t_max}(I_i), keep each overlapping vertex in the
// lowest-index part, then assign the leftover layers A_{t_max}..A_1, each
// vertex to the lowest-index part with v in C_{t-1}(I_i).
struct PartitionResult {
    std::vector<VertexSet> parts;
    long long monochromatic_edges = 0;
};
PartitionResult container_partition(const Graph& g, const std::vector<VertexSet>& sets,
                                    int t_max);

// Debug dump: one line per step "t v_t |F_t| |C_t|", optionally with
// explicit member lists.
void dump_trace(std::ostream& out, const ContainerTrace& trace, bool members = false);

}  // namespace gct
