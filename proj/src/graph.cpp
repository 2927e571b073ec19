#include "gct/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gct {

VertexSet::VertexSet(int ground_size, const std::vector<int>& members)
    : bits_(ground_size) {
    for (int v : members) {
        if (v < 0 || v >= ground_size)
            throw std::invalid_argument("VertexSet: member " + std::to_string(v) +
                                        " outside ground set of size " +
                                        std::to_string(ground_size));
        bits_.set(v);
    }
}

long long Graph::edges_within(const Bitset& S) const {
    long long twice = 0;
    S.for_each([&](int v) { twice += rows_[v].count_and(S); });
    return twice / 2;
}

bool Graph::is_independent(const VertexSet& S) const {
    return find_internal_edge(S).first < 0;
}

std::pair<int, int> Graph::find_internal_edge(const VertexSet& S) const {
    int found_u = -1, found_v = -1;
    for (int u = S.bits().first(); u >= 0; u = S.bits().next_after(u)) {
        Bitset hit = rows_[u] & S.bits();
        int v = hit.first();
        if (v >= 0) {
            found_u = u;
            found_v = v;
            break;
        }
    }
    return {found_u, found_v};
}

bool Graph::is_clique(const VertexSet& S) const {
    int k = S.size();
    for (int u = S.bits().first(); u >= 0; u = S.bits().next_after(u))
        if (rows_[u].count_and(S.bits()) != k - 1) return false;
    return true;
}

bool Graph::is_proper_coloring(const std::vector<int>& color) const {
    for (int u = 0; u < n_; ++u) {
        if (color[u] < 0) continue;
        for (int v = rows_[u].first(); v >= 0; v = rows_[u].next_after(v)) {
            if (v <= u) continue;
            if (color[v] == color[u]) return false;
        }
    }
    return true;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("build_graph: endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) +
                                        ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("build_graph: self-loop at vertex " +
                                        std::to_string(u));
        g.add_edge_unchecked(u, v);
    }
    return g;
}

Graph complement(const Graph& g) {
    Graph out(g.n_);
    for (int u = 0; u < g.n_; ++u)
        for (int v = u + 1; v < g.n_; ++v)
            if (!g.adjacent(u, v)) out.add_edge_unchecked(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& S, std::vector<int>* relabel) {
    if (S.ground_size() != g.n())
        throw std::invalid_argument("induced_subgraph: ground set mismatch");
    std::vector<int> ids = S.to_vector();  // ascending
    Graph out(int(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j])) out.add_edge_unchecked(int(i), int(j));
    if (relabel) *relabel = std::move(ids);
    return out;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) continue;  // blank / comment-only line
        if (!(ls >> b)) throw std::runtime_error("edge list: malformed line: " + line);
        if (n < 0) {
            n = a;
            m = b;
        } else {
            edges.emplace_back(int(a), int(b));
        }
    }
    if (n < 0) throw std::runtime_error("edge list: missing header line");
    if ((long long)edges.size() != m)
        throw std::runtime_error("edge list: header announces " + std::to_string(m) +
                                 " edges, found " + std::to_string(edges.size()));
    return build_graph(int(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.neighbors(u).next_after(u); v >= 0;
             v = g.neighbors(u).next_after(v))
            out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

}  // namespace gct
