#pragma once

// Brute-force oracles used only by tests; they stay independent of the
// library's search paths.

#include <limits>
#include <utility>
#include <vector>

#include "gct/graph.hpp"

namespace testutil {

inline std::vector<unsigned> adjacency_masks(const gct::Graph& g) {
    std::vector<unsigned> adj(g.n(), 0);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (g.adjacent(u, v)) adj[u] |= 1u << v;
    return adj;
}

inline long long edges_in_mask(const std::vector<unsigned>& adj, unsigned mask) {
    long long twice = 0;
    for (unsigned rest = mask; rest; rest &= rest - 1)
        twice += __builtin_popcount(adj[__builtin_ctz(rest)] & mask);
    return twice / 2;
}

// Largest independent set size by enumerating all 2^n subsets (n <= ~20).
inline int brute_max_independent_set(const gct::Graph& g) {
    auto adj = adjacency_masks(g);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.n()); ++mask) {
        if (__builtin_popcount(mask) <= best) continue;
        bool indep = true;
        for (unsigned rest = mask; rest && indep; rest &= rest - 1)
            if (adj[__builtin_ctz(rest)] & mask) indep = false;
        if (indep) best = __builtin_popcount(mask);
    }
    return best;
}

// k-colorability by enumerating all k^n assignments (n small).
inline bool brute_k_colorable(const gct::Graph& g, int k) {
    int n = g.n();
    std::vector<int> color(n, 0);
    while (true) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.adjacent(u, v) && color[u] == color[v]) ok = false;
        if (ok) return true;
        int i = n - 1;
        while (i >= 0 && color[i] == k - 1) color[i--] = 0;
        if (i < 0) return false;
        ++color[i];
    }
}

// Min internal edges over m-subsets, by full enumeration.
inline long long brute_indep_set_distance(const gct::Graph& g, int m) {
    auto adj = adjacency_masks(g);
    long long best = std::numeric_limits<long long>::max();
    for (unsigned mask = 0; mask < (1u << g.n()); ++mask)
        if (__builtin_popcount(mask) == m)
            best = std::min(best, edges_in_mask(adj, mask));
    return best;
}

// Min monochromatic edges over all k-partitions, by full enumeration.
inline long long brute_k_color_distance(const gct::Graph& g, int k) {
    int n = g.n();
    std::vector<int> color(n, 0);
    long long best = std::numeric_limits<long long>::max();
    while (true) {
        long long mono = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) && color[u] == color[v]) ++mono;
        best = std::min(best, mono);
        int i = n - 1;
        while (i >= 0 && color[i] == k - 1) color[i--] = 0;
        if (i < 0) return best;
        ++color[i];
    }
}

inline gct::Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return gct::build_graph(n, e);
}

}  // namespace testutil
