#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gct/graph.hpp"

namespace gct {

enum class Model {
    Gnp,
    PlantedIndepSet,
    PlantedClique,
    CompleteMultipartite,
    Complete,
    Empty,
};

Model model_from_string(const std::string& s);
std::string model_to_string(Model m);

// Deterministic instance description: a fixed (model, parameters, seed)
// triple yields a bit-identical graph on every run and platform.
struct GenSpec {
    Model model = Model::Gnp;
    int n = 0;
    double p = 0.5;           // gnp / planted models
    double rho = 0.0;         // planted fraction; planted set has ceil(rho*n) vertices
    std::vector<int> parts;   // complete_multipartite
    std::uint64_t seed = 0;
};

// Uniform s-subset of {0,...,n-1}, drawn without replacement.
VertexSet sample_vertices(int n, int s, std::uint64_t seed);

Graph generate(const GenSpec& spec);

// Planted subset used by planted_is / planted_clique for a given spec.
VertexSet planted_set(const GenSpec& spec);

}  // namespace gct
