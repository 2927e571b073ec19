#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gct/graph.hpp"

namespace gct {

enum class Property { IndepSet, Clique, KColorable };

std::string property_to_string(Property p);
Property property_from_string(const std::string& s);

struct TesterConfig {
    Property property = Property::IndepSet;
    double rho = 0.0;       // IndepSet / Clique
    int k = 0;              // KColorable
    double epsilon = 0.1;
    double constant_c = 4.0;  // the analysis constant, exposed for sweeps
    double gap_tau = 0.0;     // gap-variant threshold; 0 = canonical tester
    std::uint64_t seed = 0;
    std::optional<int> sample_cap;  // extra cap on s beyond n
};

struct TestOutcome {
    bool accepted = false;
    VertexSet sample;
    int sample_size_requested = 0;
    int sample_size_used = 0;
    // Witness in original vertex ids: an independent set / clique, or a
    // proper coloring of the sampled vertices (-1 off-sample).
    std::optional<VertexSet> witness_set;
    std::optional<std::vector<int>> witness_coloring;
    int witness_size = 0;
};

// ceil(c * (rho^3/eps^2) * ln^3(1/eps)). Warns (stderr) outside the
// nontrivial regime eps < rho^2 but still computes.
int sample_size_indepset(double rho, double eps, double c);

// ceil(c * (k/eps) * ln^2(1/eps)). Warns outside eps < 1/k.
int sample_size_kcol(int k, double eps, double c);

// ceil(c * (n/(delta^2 k)) * ln^3(n/(delta^2 k))); the log factor is
// clamped to 1 (with a warning) when its argument drops to <= e.
long long dks_params(long long n, long long k, double delta, double c);

// Canonical testers: sample s vertices without replacement, decide on the
// induced subgraph exactly. Pure functions of (G, config).
TestOutcome test_indep_set(const Graph& g, const TesterConfig& config);
TestOutcome test_clique(const Graph& g, const TesterConfig& config);
TestOutcome test_k_colorable(const Graph& g, const TesterConfig& config);

// Dispatch on config.property.
TestOutcome run_tester(const Graph& g, const TesterConfig& config);

// Same testers with the requested sample size given directly instead of
// derived from the formula (sweep support).
TestOutcome run_tester_fixed_s(const Graph& g, const TesterConfig& config,
                               int s_requested);

}  // namespace gct
