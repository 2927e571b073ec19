#include "gct/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "gct/rng.hpp"

namespace gct {

namespace {

// Sub-seed tags so the edge draws and the planted-subset draw are
// independent streams of the same spec seed.
constexpr std::uint64_t kEdgeStream = 0;
constexpr std::uint64_t kPlantStream = 1;

int ceil_fraction(double rho, int n) {
    return int(std::ceil(rho * n - 1e-12));
}

// Pairs iterated in fixed lexicographic order, one uniform draw per pair.
Graph gnp(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph remove_inside(const Graph& g, const VertexSet& S) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.neighbors(u).next_after(u); v >= 0;
             v = g.neighbors(u).next_after(v))
            if (!(S.contains(u) && S.contains(v))) edges.emplace_back(u, v);
    return build_graph(g.n(), edges);
}

}  // namespace

Model model_from_string(const std::string& s) {
    if (s == "gnp") return Model::Gnp;
    if (s == "planted_is") return Model::PlantedIndepSet;
    if (s == "planted_clique") return Model::PlantedClique;
    if (s == "complete_multipartite") return Model::CompleteMultipartite;
    if (s == "complete") return Model::Complete;
    if (s == "empty") return Model::Empty;
    throw std::invalid_argument("unknown model: " + s);
}

std::string model_to_string(Model m) {
    switch (m) {
        case Model::Gnp: return "gnp";
        case Model::PlantedIndepSet: return "planted_is";
        case Model::PlantedClique: return "planted_clique";
        case Model::CompleteMultipartite: return "complete_multipartite";
        case Model::Complete: return "complete";
        case Model::Empty: return "empty";
    }
    return "?";
}

VertexSet sample_vertices(int n, int s, std::uint64_t seed) {
    if (s < 0 || s > n)
        throw std::invalid_argument("sample_vertices: need 0 <= s <= n, got s=" +
                                    std::to_string(s) + " n=" + std::to_string(n));
    Rng rng(seed);
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int i = 0; i < s; ++i) {
        int j = i + int(rng.below(std::uint64_t(n - i)));
        std::swap(ids[i], ids[j]);
    }
    ids.resize(s);
    return VertexSet(n, ids);
}

VertexSet planted_set(const GenSpec& spec) {
    if (spec.model != Model::PlantedIndepSet && spec.model != Model::PlantedClique)
        throw std::invalid_argument("planted_set: spec has no planted subset");
    int m = ceil_fraction(spec.rho, spec.n);
    return sample_vertices(spec.n, m, mix_seed(spec.seed, kPlantStream));
}

Graph generate(const GenSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("generate: negative n");
    switch (spec.model) {
        case Model::Gnp:
            if (spec.p < 0.0 || spec.p > 1.0)
                throw std::invalid_argument("generate: p outside [0,1]");
            return gnp(spec.n, spec.p, mix_seed(spec.seed, kEdgeStream));
        case Model::PlantedIndepSet: {
            if (spec.p < 0.0 || spec.p > 1.0)
                throw std::invalid_argument("generate: p outside [0,1]");
            if (spec.rho <= 0.0 || spec.rho > 1.0)
                throw std::invalid_argument("generate: rho outside (0,1]");
            Graph g = gnp(spec.n, spec.p, mix_seed(spec.seed, kEdgeStream));
            return remove_inside(g, planted_set(spec));
        }
        case Model::PlantedClique: {
            // Complement construction: a planted independent set in the
            // complement density becomes a planted clique at density p.
            GenSpec dual = spec;
            dual.model = Model::PlantedIndepSet;
            dual.p = 1.0 - spec.p;
            return complement(generate(dual));
        }
        case Model::CompleteMultipartite: {
            long long total = 0;
            for (int sz : spec.parts) {
                if (sz <= 0)
                    throw std::invalid_argument("generate: part sizes must be positive");
                total += sz;
            }
            if (spec.n != 0 && total != spec.n)
                throw std::invalid_argument("generate: part sizes do not sum to n");
            std::vector<int> part_of;
            for (std::size_t i = 0; i < spec.parts.size(); ++i)
                part_of.insert(part_of.end(), spec.parts[i], int(i));
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < int(total); ++u)
                for (int v = u + 1; v < int(total); ++v)
                    if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
            return build_graph(int(total), edges);
        }
        case Model::Complete: {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
            return build_graph(spec.n, edges);
        }
        case Model::Empty:
            return build_graph(spec.n, {});
    }
    throw std::invalid_argument("generate: unknown model");
}

}  // namespace gct
