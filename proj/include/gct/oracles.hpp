#pragma once

#include <string>
#include <vector>

#include "gct/graph.hpp"

namespace gct {

// Exact edit distance to a property, with the optimal witness. The epsilon
// equivalent is edit_count / n^2. Only the relevant edit direction is
// counted: removals for independent-set and colorability, additions for
// clique (the other direction never helps for these properties).
struct DistanceReport {
    std::string property;
    long long edit_count = 0;
    double epsilon_equivalent = 0.0;
    VertexSet witness_set;               // indep_set / clique
    std::vector<int> witness_partition;  // k_colorable: color per vertex
};

// Enumeration caps (binomial(n,m) for subset oracles, k^(n-1) for the
// partition oracle with vertex 0 pinned to color 0).
inline constexpr long long kExhaustiveCap = 10'000'000;

// Min over all m-subsets U of edges(G[U]). Throws when binomial(n,m)
// exceeds the cap, advising analytic certification.
DistanceReport distance_to_indep_set(const Graph& g, int m);

// Min over all m-subsets of missing internal edges; identically
// distance_to_indep_set(complement(G), m).
DistanceReport distance_to_clique(const Graph& g, int m);

// Min over all k-partitions of the monochromatic edge count, vertex 0
// pinned to color 0 for symmetry.
DistanceReport distance_to_k_colorable(const Graph& g, int k);

// Closed forms for the complete graph, valid at any n: the balanced
// m-subset / balanced k-partition is optimal. Cross-checked against the
// exhaustive oracles at small n.
long long complete_graph_indep_set_distance(int n, int m);
long long complete_graph_k_colorable_distance(int n, int k);

// Hypergeometric H(N, K, draws): marked elements among `draws` taken
// without replacement from a population of N with K marked.
struct HypergeomParams {
    long long N = 0;
    long long K = 0;
    long long draws = 0;
    long long theta = 0;  // tail threshold
};

// Exact Pr[X >= theta], mass summed via log-factorials.
double hypergeometric_tail(const HypergeomParams& p);

// exp(-(theta - E[X])^2 / (theta + E[X])) with E[X] = draws*K/N.
// Throws when theta < E[X].
double chernoff_bound(const HypergeomParams& p);

// True iff Pr[X >= floor(draws*K/N)] >= 1/2, computed exactly. The
// hypergeometric median never falls below the floor of the mean, so this
// holds for every valid (N, K, draws).
bool hypergeometric_median_check(long long N, long long K, long long draws);

long long binomial(int n, int k);

}  // namespace gct
