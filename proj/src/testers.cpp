#include "gct/testers.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "gct/exact.hpp"
#include "gct/generators.hpp"

namespace gct {

namespace {

int ceil_real(double x) { return int(std::ceil(x - 1e-12)); }

int threshold(double rho, double tau, int s) {
    return ceil_real((rho - tau) * s);
}

}  // namespace

std::string property_to_string(Property p) {
    switch (p) {
        case Property::IndepSet: return "indep_set";
        case Property::Clique: return "clique";
        case Property::KColorable: return "k_colorable";
    }
    return "?";
}

Property property_from_string(const std::string& s) {
    if (s == "indep_set" || s == "is") return Property::IndepSet;
    if (s == "clique") return Property::Clique;
    if (s == "k_colorable" || s == "kcol") return Property::KColorable;
    throw std::invalid_argument("unknown property: " + s);
}

int sample_size_indepset(double rho, double eps, double c) {
    if (!(eps > 0 && eps < 1) || rho <= 0 || c <= 0)
        throw std::invalid_argument("sample_size_indepset: bad parameters");
    if (eps >= rho * rho)
        std::cerr << "warning: eps >= rho^2, testing is trivial in this regime\n";
    double L = std::log(1.0 / eps);
    return ceil_real(c * rho * rho * rho / (eps * eps) * L * L * L);
}

int sample_size_kcol(int k, double eps, double c) {
    if (!(eps > 0 && eps < 1) || k < 1 || c <= 0)
        throw std::invalid_argument("sample_size_kcol: bad parameters");
    if (eps >= 1.0 / k)
        std::cerr << "warning: eps >= 1/k, testing is trivial in this regime\n";
    double L = std::log(1.0 / eps);
    return ceil_real(c * k / eps * L * L);
}

long long dks_params(long long n, long long k, double delta, double c) {
    if (k < 1 || k >= n || !(delta > 0 && delta <= 1) || c <= 0)
        throw std::invalid_argument("dks_params: bad parameters");
    double base = double(n) / (delta * delta * k);
    double L = std::log(base);
    if (L <= 1.0) {
        std::cerr << "warning: dks_params log factor clamped to 1\n";
        L = 1.0;
    }
    return (long long)std::ceil(c * base * L * L * L - 1e-9);
}

namespace {

TestOutcome make_sample(const Graph& g, int s_requested, const TesterConfig& cfg) {
    TestOutcome out;
    out.sample_size_requested = s_requested;
    int s = std::min(s_requested, g.n());
    if (cfg.sample_cap) s = std::min(s, *cfg.sample_cap);
    out.sample_size_used = s;
    out.sample = sample_vertices(g.n(), s, cfg.seed);
    return out;
}

}  // namespace

namespace {

TestOutcome test_indep_set_s(const Graph& g, const TesterConfig& cfg, int s_requested) {
    if (cfg.rho <= 0 || cfg.rho > 1)
        throw std::invalid_argument("test_indep_set: need 0 < rho <= 1");
    if (cfg.gap_tau < 0 || cfg.gap_tau >= cfg.rho)
        throw std::invalid_argument("test_indep_set: need 0 <= tau < rho");
    TestOutcome out = make_sample(g, s_requested, cfg);
    std::vector<int> ids;
    Graph sub = induced_subgraph(g, out.sample, &ids);
    int need = threshold(cfg.rho, cfg.gap_tau, out.sample_size_used);
    IndepSetResult r = max_independent_set_at_least(sub, need);
    out.accepted = r.found;
    if (r.found) {
        VertexSet w(g.n());
        for (int v : r.witness->to_vector()) w.add(ids[v]);
        out.witness_size = w.size();
        out.witness_set = std::move(w);
    }
    return out;
}

TestOutcome test_k_colorable_s(const Graph& g, const TesterConfig& cfg,
                               int s_requested) {
    if (cfg.k < 1) throw std::invalid_argument("test_k_colorable: need k >= 1");
    TestOutcome out = make_sample(g, s_requested, cfg);
    std::vector<int> ids;
    Graph sub = induced_subgraph(g, out.sample, &ids);
    ColoringResult r = is_k_colorable(sub, cfg.k);
    out.accepted = r.colorable;
    if (r.colorable) {
        std::vector<int> coloring(g.n(), -1);
        for (std::size_t i = 0; i < ids.size(); ++i) coloring[ids[i]] = (*r.witness)[i];
        out.witness_size = int(ids.size());
        out.witness_coloring = std::move(coloring);
    }
    return out;
}

}  // namespace

TestOutcome test_indep_set(const Graph& g, const TesterConfig& cfg) {
    return test_indep_set_s(
        g, cfg, sample_size_indepset(cfg.rho, cfg.epsilon, cfg.constant_c));
}

TestOutcome test_clique(const Graph& g, const TesterConfig& cfg) {
    // Identical run on the complement; witness ids carry over unchanged.
    return test_indep_set(complement(g), cfg);
}

TestOutcome test_k_colorable(const Graph& g, const TesterConfig& cfg) {
    return test_k_colorable_s(g, cfg,
                              sample_size_kcol(cfg.k, cfg.epsilon, cfg.constant_c));
}

TestOutcome run_tester(const Graph& g, const TesterConfig& cfg) {
    switch (cfg.property) {
        case Property::IndepSet: return test_indep_set(g, cfg);
        case Property::Clique: return test_clique(g, cfg);
        case Property::KColorable: return test_k_colorable(g, cfg);
    }
    throw std::invalid_argument("run_tester: unknown property");
}

TestOutcome run_tester_fixed_s(const Graph& g, const TesterConfig& cfg,
                               int s_requested) {
    switch (cfg.property) {
        case Property::IndepSet: return test_indep_set_s(g, cfg, s_requested);
        case Property::Clique: return test_indep_set_s(complement(g), cfg, s_requested);
        case Property::KColorable: return test_k_colorable_s(g, cfg, s_requested);
    }
    throw std::invalid_argument("run_tester_fixed_s: unknown property");
}

}  // namespace gct
