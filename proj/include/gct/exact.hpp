#pragma once

#include <optional>
#include <vector>

#include "gct/graph.hpp"

namespace gct {

// Exact decision: does G contain an independent set of size >= m?
// Branch-and-bound on bitset rows; the witness (when present) is verified
// independent before being returned.
struct IndepSetResult {
    bool found = false;
    std::optional<VertexSet> witness;  // size >= m when found
};
IndepSetResult max_independent_set_at_least(const Graph& g, int m);

// Clique counterpart via the complement graph.
IndepSetResult max_clique_at_least(const Graph& g, int m);

// Exact k-colorability via DSATUR-ordered backtracking. The witness
// coloring (values in [0,k)) is verified to have no monochromatic edge.
struct ColoringResult {
    bool colorable = false;
    std::optional<std::vector<int>> witness;
};
ColoringResult is_k_colorable(const Graph& g, int k);

// Greedy maximal independent set, vertices considered in the given order.
VertexSet greedy_maximal_independent_set(const Graph& g, const std::vector<int>& order);

// Random-order greedy maximal independent set (deterministic in seed).
VertexSet random_maximal_independent_set(const Graph& g, std::uint64_t seed);

// All maximal independent sets of G (Bron-Kerbosch with pivoting on the
// complement). Intended for small n; throws if n exceeds max_n.
std::vector<VertexSet> all_maximal_independent_sets(const Graph& g, int max_n = 32);

}  // namespace gct
