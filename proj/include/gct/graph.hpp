#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gct/bitset.hpp"

namespace gct {

// Subset of a fixed ground set {0, ..., n-1}.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int ground_size) : bits_(ground_size) {}
    VertexSet(int ground_size, const std::vector<int>& members);

    static VertexSet full(int ground_size) {
        VertexSet s(ground_size);
        s.bits_.set_all();
        return s;
    }
    static VertexSet from_bits(Bitset b) {
        VertexSet s;
        s.bits_ = std::move(b);
        return s;
    }

    int ground_size() const { return bits_.size_bits(); }
    int size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(int v) const { return bits_.test(v); }
    void add(int v) { bits_.set(v); }
    void remove(int v) { bits_.reset(v); }

    bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }

    std::vector<int> to_vector() const { return bits_.to_vector(); }
    const Bitset& bits() const { return bits_; }
    Bitset& bits() { return bits_; }

private:
    Bitset bits_;
};

// Immutable simple undirected graph with bitset adjacency rows.
// Symmetric, no self-loops; construction enforces both.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    long long edge_count() const { return m_; }
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const Bitset& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    // Degree of v inside the induced subgraph G[S].
    int degree_in(int v, const Bitset& S) const { return rows_[v].count_and(S); }

    // Number of edges of G[S].
    long long edges_within(const Bitset& S) const;

    bool is_independent(const VertexSet& S) const;
    // First edge inside S, or (-1,-1) when S is independent.
    std::pair<int, int> find_internal_edge(const VertexSet& S) const;
    bool is_clique(const VertexSet& S) const;
    // True iff no edge of G[S] is monochromatic under color[] (entries < 0
    // outside S are ignored when S spans only colored vertices).
    bool is_proper_coloring(const std::vector<int>& color) const;

    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
    friend Graph complement(const Graph& g);
    friend Graph induced_subgraph(const Graph& g, const VertexSet& S,
                                  std::vector<int>* relabel);

private:
    explicit Graph(int n) : n_(n), rows_(n, Bitset(n)) {}
    void add_edge_unchecked(int u, int v) {
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++m_;
        }
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> rows_;
};

// Throws std::invalid_argument on self-loops or out-of-range endpoints.
// Duplicate pairs (in either orientation) collapse to a single edge.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

Graph complement(const Graph& g);

// relabel, when non-null, receives the original id of each output vertex
// (output vertex i corresponds to original relabel[i], ascending).
Graph induced_subgraph(const Graph& g, const VertexSet& S,
                       std::vector<int>* relabel = nullptr);

// Edge-list text format: "n m" header, then one "u v" line per edge.
// Reader accepts any edge order, blank lines and '#' comments; writer emits
// edges in ascending lexicographic order.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace gct
