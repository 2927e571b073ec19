#include "gct/harness.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gct/containers.hpp"
#include "gct/exact.hpp"
#include "gct/oracles.hpp"
#include "gct/rng.hpp"

namespace gct {

TrialStats make_trial_stats(int trials, int accepts) {
    TrialStats st;
    st.trials = trials;
    st.accepts = accepts;
    if (trials == 0) return st;
    double p = double(accepts) / trials;
    st.acceptance_rate = p;
    const double z = 1.959963984540054;  // 95%
    double n = trials;
    double z2 = z * z;
    double center = (p + z2 / (2 * n)) / (1 + z2 / n);
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
    // Clamp so the point estimate always lies inside the interval; at p = 0
    // or p = 1 rounding can otherwise push a bound past it.
    st.wilson_low = std::min(p, std::max(0.0, center - half));
    st.wilson_high = std::max(p, std::min(1.0, center + half));
    return st;
}

Graph resolve_instance(const ExperimentConfig& config) {
    if (config.instance && config.instance_path)
        throw std::invalid_argument("experiment: give a model or a file, not both");
    if (config.instance) return generate(*config.instance);
    if (config.instance_path) return read_edge_list_file(*config.instance_path);
    throw std::invalid_argument("experiment: no instance given");
}

TrialStats run_trials(const Graph& g, const TesterConfig& tester, int trials,
                      std::uint64_t master_seed) {
    if (trials < 1) throw std::invalid_argument("run_trials: need trials >= 1");
    int accepts = 0;
    for (int i = 0; i < trials; ++i) {
        TesterConfig per = tester;
        per.seed = mix_seed(master_seed, std::uint64_t(i));
        if (run_tester(g, per).accepted) ++accepts;
    }
    return make_trial_stats(trials, accepts);
}

TrialStats run_trials(const ExperimentConfig& config) {
    return run_trials(resolve_instance(config), config.tester, config.trials,
                      config.tester.seed);
}

std::vector<CurveRow> acceptance_curve(const Graph& g, const TesterConfig& tester,
                                       int trials, std::uint64_t master_seed,
                                       const std::vector<int>& s_values) {
    std::vector<CurveRow> rows;
    for (std::size_t si = 0; si < s_values.size(); ++si) {
        int s = s_values[si];
        if (s <= 0) throw std::invalid_argument("acceptance_curve: s must be positive");
        CurveRow row;
        row.s_requested = s;
        row.s_used = std::min(s, g.n());
        int accepts = 0;
        for (int i = 0; i < trials; ++i) {
            TesterConfig per = tester;
            // Distinct seed stream per sweep row; row order never matters.
            per.seed = mix_seed(mix_seed(master_seed, 1000003 * (si + 1)), i);
            if (run_tester_fixed_s(g, per, s).accepted) ++accepts;
        }
        row.stats = make_trial_stats(trials, accepts);
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::vector<VertexSet> maximal_sets_for_validation(const Graph& g, std::uint64_t seed) {
    if (g.n() <= 24) return all_maximal_independent_sets(g, 24);
    std::vector<VertexSet> sets;
    for (int i = 0; i < 100; ++i)
        sets.push_back(random_maximal_independent_set(g, mix_seed(seed, i)));
    return sets;
}

}  // namespace

std::vector<ValidationResult> validate_lemmas(const std::vector<CorpusEntry>& corpus,
                                              std::uint64_t seed) {
    std::vector<ValidationResult> results;
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        const CorpusEntry& e = corpus[idx];
        ValidationResult r;
        r.label = e.label;
        if (!e.certified) {
            r.skipped = true;
            r.detail = "farness not certified; skipped";
            std::cerr << "warning: skipping uncertified instance " << e.label << "\n";
            results.push_back(r);
            continue;
        }
        std::uint64_t eseed = mix_seed(seed, idx);
        if (e.kind == FarFrom::IndepSet) {
            auto sets = maximal_sets_for_validation(e.graph, eseed);
            r.sets_checked = int(sets.size());
            for (const auto& I : sets) {
                LemmaReport rep = find_small_container(e.graph, I, e.rho, e.epsilon);
                if (!rep.satisfied) ++r.failures;
            }
        } else {
            // Random k-tuples of maximal independent sets.
            const int tuples = 20;
            for (int ti = 0; ti < tuples; ++ti) {
                std::vector<VertexSet> tuple;
                for (int j = 0; j < e.k; ++j)
                    tuple.push_back(random_maximal_independent_set(
                        e.graph, mix_seed(eseed, ti * 100 + j)));
                LemmaReport rep = find_small_union(e.graph, tuple, e.epsilon);
                ++r.sets_checked;
                if (!rep.satisfied) ++r.failures;
            }
        }
        r.passed = (r.failures == 0);
        results.push_back(r);
    }
    return results;
}

std::vector<CorpusEntry> default_corpus(std::uint64_t seed) {
    std::vector<CorpusEntry> corpus;
    // Complete graphs: farness in closed form.
    for (int n : {40, 80, 120, 160, 200}) {
        CorpusEntry e;
        e.label = "K" + std::to_string(n) + "/indep_set";
        e.graph = generate({Model::Complete, n});
        e.kind = FarFrom::IndepSet;
        e.rho = 0.5;
        int m = (n + 1) / 2;
        double far = double(complete_graph_indep_set_distance(n, m)) / (double(n) * n);
        e.epsilon = 0.8 * far;
        e.certified = true;
        e.cert_method = "analytic";
        corpus.push_back(e);
    }
    for (int n : {30, 60, 100}) {
        CorpusEntry e;
        e.label = "K" + std::to_string(n) + "/k_colorable";
        e.graph = generate({Model::Complete, n});
        e.kind = FarFrom::KColorable;
        e.k = 3;
        double far = double(complete_graph_k_colorable_distance(n, 3)) / (double(n) * n);
        e.epsilon = std::min(0.9 * far, 0.13);
        e.certified = true;
        e.cert_method = "analytic";
        corpus.push_back(e);
    }
    // Oracle-certified dense random instances.
    for (int i = 0; i < 5; ++i) {
        int n = 16;
        CorpusEntry e;
        e.graph = generate({Model::Gnp, n, 0.8, 0.0, {}, mix_seed(seed, 100 + i)});
        e.kind = FarFrom::IndepSet;
        e.rho = 0.5;
        int m = (n + 1) / 2;
        auto rep = distance_to_indep_set(e.graph, m);
        if (rep.edit_count == 0) continue;
        e.epsilon = 0.9 * rep.epsilon_equivalent;
        e.label = "gnp" + std::to_string(n) + "#" + std::to_string(i) + "/indep_set";
        e.certified = true;
        e.cert_method = "oracle";
        corpus.push_back(e);
    }
    return corpus;
}

std::string csv_header() {
    return "property,n,rho_or_k,epsilon,c,tau,s,trials,accepts,rate,wilson_low,"
           "wilson_high";
}

std::string csv_row(const TesterConfig& tester, int n, int s, const TrialStats& st) {
    std::ostringstream os;
    os << property_to_string(tester.property) << ',' << n << ',';
    if (tester.property == Property::KColorable)
        os << tester.k;
    else
        os << tester.rho;
    os << ',' << tester.epsilon << ',' << tester.constant_c << ',' << tester.gap_tau
       << ',' << s << ',' << st.trials << ',' << st.accepts << ','
       << st.acceptance_rate << ',' << st.wilson_low << ',' << st.wilson_high;
    return os.str();
}

std::string trial_record_json(const TesterConfig& tester, std::uint64_t trial_seed,
                              const TestOutcome& out) {
    nlohmann::json params;
    if (tester.property == Property::KColorable)
        params["k"] = tester.k;
    else
        params["rho"] = tester.rho;
    params["epsilon"] = tester.epsilon;
    params["c"] = tester.constant_c;
    params["tau"] = tester.gap_tau;
    nlohmann::json j{{"property", property_to_string(tester.property)},
                     {"params", params},
                     {"seed", trial_seed},
                     {"s_requested", out.sample_size_requested},
                     {"s_used", out.sample_size_used},
                     {"accepted", out.accepted},
                     {"witness_size", out.witness_size}};
    return j.dump();
}

}  // namespace gct
