#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gct/generators.hpp"
#include "gct/graph.hpp"
#include "gct/testers.hpp"

namespace gct {

struct TrialStats {
    int trials = 0;
    int accepts = 0;
    double acceptance_rate = 0.0;
    double wilson_low = 0.0;
    double wilson_high = 1.0;
};

// 95% Wilson score interval for a binomial proportion.
TrialStats make_trial_stats(int trials, int accepts);

struct ExperimentConfig {
    std::optional<GenSpec> instance;      // exactly one of these two
    std::optional<std::string> instance_path;
    TesterConfig tester;
    int trials = 1;
    std::vector<int> sweep_s;    // acceptance_curve only
    std::string output_path;
};

Graph resolve_instance(const ExperimentConfig& config);

// `trials` independent tester invocations; trial i runs with seed
// mix_seed(master_seed, i), so aggregation is order-independent and any
// single trial can be replayed.
TrialStats run_trials(const Graph& g, const TesterConfig& tester, int trials,
                      std::uint64_t master_seed);
TrialStats run_trials(const ExperimentConfig& config);

struct CurveRow {
    int s_requested;
    int s_used;
    TrialStats stats;
};

// One TrialStats row per requested sample size, overriding the
// formula-derived s (still capped at n).
std::vector<CurveRow> acceptance_curve(const Graph& g, const TesterConfig& tester,
                                       int trials, std::uint64_t master_seed,
                                       const std::vector<int>& s_values);

// ---- Lemma validation corpus ----

enum class FarFrom { IndepSet, KColorable };

struct CorpusEntry {
    std::string label;
    Graph graph;
    FarFrom kind = FarFrom::IndepSet;
    double rho = 0.0;  // IndepSet
    int k = 0;         // KColorable
    double epsilon = 0.0;
    bool certified = false;       // farness established by oracle or closed form
    std::string cert_method;      // "oracle" | "analytic" | "uncertified"
};

struct ValidationResult {
    std::string label;
    bool skipped = false;   // uncertified entries are skipped with a warning
    bool passed = false;
    int sets_checked = 0;
    int failures = 0;
    std::string detail;
};

// Runs find_small_container over maximal independent sets (all of them at
// n <= 24, a 100-sample otherwise) or find_small_union over random
// k-tuples, per entry.
std::vector<ValidationResult> validate_lemmas(const std::vector<CorpusEntry>& corpus,
                                              std::uint64_t seed = 1);

// Default corpus: complete graphs plus oracle-certified random instances.
std::vector<CorpusEntry> default_corpus(std::uint64_t seed = 7);

// ---- Output formats ----

// Fixed CSV schema:
// property,n,rho_or_k,epsilon,c,tau,s,trials,accepts,rate,wilson_low,wilson_high
std::string csv_header();
std::string csv_row(const TesterConfig& tester, int n, int s, const TrialStats& stats);

// One JSON record per trial with fields exactly:
// property, params, seed, s_requested, s_used, accepted, witness_size
std::string trial_record_json(const TesterConfig& tester, std::uint64_t trial_seed,
                              const TestOutcome& outcome);

}  // namespace gct
