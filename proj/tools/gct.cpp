// Command-line front end: instance generation, single tester runs, seeded
// trial batches, sample-size sweeps, lemma-corpus validation, and exact
// oracle queries. Exit codes: 0 ok, 2 invalid arguments, 3 precondition
// failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gct/containers.hpp"
#include "gct/exact.hpp"
#include "gct/generators.hpp"
#include "gct/harness.hpp"
#include "gct/oracles.hpp"
#include "gct/rng.hpp"
#include "gct/testers.hpp"

namespace {

using nlohmann::json;

struct CommonFlags {
    std::string model = "gnp";
    int n = 0;
    double p = 0.5;
    double rho = 0.5;
    int k = 3;
    double eps = 0.1;
    double c = 4.0;
    double tau = 0.0;
    std::uint64_t seed = 1;
    std::string instance_file;
    std::string property = "indep_set";
    std::string out;
    std::string format = "csv";
    int trials = 100;
    std::string config_file;
};

void add_instance_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--model", f.model, "gnp|planted_is|planted_clique|"
                                        "complete_multipartite|complete|empty");
    cmd->add_option("--n", f.n, "vertex count");
    cmd->add_option("--p", f.p, "edge probability");
    cmd->add_option("--rho", f.rho, "planted / target fraction");
    cmd->add_option("--seed", f.seed, "64-bit seed");
    cmd->add_option("--in", f.instance_file, "read instance from edge-list file");
}

void add_tester_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--property", f.property, "indep_set|clique|k_colorable");
    cmd->add_option("--k", f.k, "color count");
    cmd->add_option("--eps", f.eps, "distance parameter");
    cmd->add_option("--c", f.c, "sample-size constant");
    cmd->add_option("--tau", f.tau, "gap parameter");
}

gct::GenSpec spec_from_flags(const CommonFlags& f) {
    gct::GenSpec spec;
    spec.model = gct::model_from_string(f.model);
    spec.n = f.n;
    spec.p = f.p;
    spec.rho = f.rho;
    spec.seed = f.seed;
    if (spec.model == gct::Model::CompleteMultipartite) {
        // Balanced k parts by default.
        int q = f.n / f.k, r = f.n % f.k;
        for (int i = 0; i < f.k; ++i) spec.parts.push_back(q + (i < r ? 1 : 0));
    }
    return spec;
}

gct::Graph load_graph(const CommonFlags& f) {
    if (!f.instance_file.empty()) return gct::read_edge_list_file(f.instance_file);
    return gct::generate(spec_from_flags(f));
}

gct::TesterConfig tester_from_flags(const CommonFlags& f) {
    gct::TesterConfig cfg;
    cfg.property = gct::property_from_string(f.property);
    cfg.rho = f.rho;
    cfg.k = f.k;
    cfg.epsilon = f.eps;
    cfg.constant_c = f.c;
    cfg.gap_tau = f.tau;
    cfg.seed = f.seed;
    return cfg;
}

// JSON config file values are applied first; any flag the user passed on
// the command line wins.
void apply_config_file(CLI::App* cmd, CommonFlags& f) {
    if (f.config_file.empty()) return;
    std::ifstream in(f.config_file);
    if (!in) throw std::invalid_argument("cannot open config " + f.config_file);
    json j = json::parse(in);
    auto maybe = [&](const char* key, auto& target, const char* flag) {
        if (j.contains(key) && cmd->count(flag) == 0)
            target = j[key].get<std::decay_t<decltype(target)>>();
    };
    maybe("model", f.model, "--model");
    maybe("n", f.n, "--n");
    maybe("p", f.p, "--p");
    maybe("rho", f.rho, "--rho");
    maybe("k", f.k, "--k");
    maybe("epsilon", f.eps, "--eps");
    maybe("c", f.c, "--c");
    maybe("tau", f.tau, "--tau");
    maybe("seed", f.seed, "--seed");
    maybe("property", f.property, "--property");
    maybe("trials", f.trials, "--trials");
    maybe("out", f.out, "--out");
    maybe("format", f.format, "--format");
    maybe("instance", f.instance_file, "--in");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output " + path);
    return file;
}

int cmd_gen(const CommonFlags& f) {
    gct::Graph g = gct::generate(spec_from_flags(f));
    std::ofstream file;
    gct::write_edge_list(open_out(file, f.out), g);
    return 0;
}

int cmd_test(const CommonFlags& f) {
    gct::Graph g = load_graph(f);
    gct::TesterConfig cfg = tester_from_flags(f);
    gct::TestOutcome out = gct::run_tester(g, cfg);
    std::cout << gct::trial_record_json(cfg, cfg.seed, out) << "\n";
    return 0;
}

int cmd_trials(const CommonFlags& f) {
    gct::Graph g = load_graph(f);
    gct::TesterConfig cfg = tester_from_flags(f);
    std::ofstream file;
    std::ostream& os = open_out(file, f.out);
    if (f.format == "json") {
        for (int i = 0; i < f.trials; ++i) {
            gct::TesterConfig per = cfg;
            per.seed = gct::mix_seed(cfg.seed, i);
            os << gct::trial_record_json(per, per.seed, gct::run_tester(g, per))
               << "\n";
        }
    } else {
        gct::TrialStats st = gct::run_trials(g, cfg, f.trials, cfg.seed);
        gct::TestOutcome probe = gct::run_tester(g, cfg);
        os << gct::csv_header() << "\n"
           << gct::csv_row(cfg, g.n(), probe.sample_size_used, st) << "\n";
    }
    return 0;
}

int cmd_curve(const CommonFlags& f, const std::vector<int>& s_values) {
    gct::Graph g = load_graph(f);
    gct::TesterConfig cfg = tester_from_flags(f);
    auto rows = gct::acceptance_curve(g, cfg, f.trials, cfg.seed, s_values);
    std::ofstream file;
    std::ostream& os = open_out(file, f.out);
    os << gct::csv_header() << "\n";
    for (const auto& row : rows)
        os << gct::csv_row(cfg, g.n(), row.s_used, row.stats) << "\n";
    return 0;
}

int cmd_validate(std::uint64_t seed) {
    auto corpus = gct::default_corpus(seed);
    auto results = gct::validate_lemmas(corpus, seed);
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << " "
                  << r.label << " sets=" << r.sets_checked
                  << " failures=" << r.failures << "\n";
        if (!r.skipped && !r.passed) all_ok = false;
    }
    return all_ok ? 0 : 3;
}

int cmd_oracle(const CommonFlags& f, const std::string& query, long long N,
               long long K, long long draws, long long theta) {
    json j;
    if (query == "tail") {
        j["value"] = gct::hypergeometric_tail({N, K, draws, theta});
    } else if (query == "chernoff") {
        j["value"] = gct::chernoff_bound({N, K, draws, theta});
    } else if (query == "median") {
        j["value"] = gct::hypergeometric_median_check(N, K, draws);
    } else {
        gct::Graph g = load_graph(f);
        gct::DistanceReport rep;
        if (query == "indep_set")
            rep = gct::distance_to_indep_set(g, int(std::ceil(f.rho * g.n() - 1e-12)));
        else if (query == "clique")
            rep = gct::distance_to_clique(g, int(std::ceil(f.rho * g.n() - 1e-12)));
        else if (query == "k_colorable")
            rep = gct::distance_to_k_colorable(g, f.k);
        else
            throw std::invalid_argument("unknown oracle query: " + query);
        j["property"] = rep.property;
        j["edit_count"] = rep.edit_count;
        j["epsilon_equivalent"] = rep.epsilon_equivalent;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph container method toolkit"};
    app.require_subcommand(1);
    CommonFlags f;

    auto* gen = app.add_subcommand("gen", "write an instance file");
    add_instance_flags(gen, f);
    gen->add_option("--k", f.k, "part count for complete_multipartite");
    gen->add_option("--out", f.out, "output path (default stdout)");

    auto* test = app.add_subcommand("test", "single tester run");
    add_instance_flags(test, f);
    add_tester_flags(test, f);
    test->add_option("--config", f.config_file, "JSON config file");

    auto* trials = app.add_subcommand("trials", "seeded trial batch");
    add_instance_flags(trials, f);
    add_tester_flags(trials, f);
    trials->add_option("--trials", f.trials, "trial count");
    trials->add_option("--out", f.out, "output path");
    trials->add_option("--format", f.format, "csv|json");
    trials->add_option("--config", f.config_file, "JSON config file");

    std::vector<int> s_values;
    auto* curve = app.add_subcommand("curve", "acceptance vs sample size");
    add_instance_flags(curve, f);
    add_tester_flags(curve, f);
    curve->add_option("--trials", f.trials, "trials per row");
    curve->add_option("--s", s_values, "sample sizes to sweep")->delimiter(',');
    curve->add_option("--out", f.out, "output path");
    curve->add_option("--config", f.config_file, "JSON config file");

    auto* validate = app.add_subcommand("validate", "run the lemma corpus");
    validate->add_option("--seed", f.seed, "corpus seed");

    std::string query = "tail";
    long long N = 0, K = 0, draws = 0, theta = 0;
    auto* oracle = app.add_subcommand("oracle", "exact distance / tail queries");
    add_instance_flags(oracle, f);
    oracle->add_option("--query", query,
                       "indep_set|clique|k_colorable|tail|chernoff|median");
    oracle->add_option("--k", f.k, "colors (k_colorable query)");
    oracle->add_option("--N", N, "population size");
    oracle->add_option("--K", K, "marked count");
    oracle->add_option("--draws", draws, "draws without replacement");
    oracle->add_option("--theta", theta, "tail threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(f);
        if (test->parsed()) {
            apply_config_file(test, f);
            return cmd_test(f);
        }
        if (trials->parsed()) {
            apply_config_file(trials, f);
            return cmd_trials(f);
        }
        if (curve->parsed()) {
            apply_config_file(curve, f);
            return cmd_curve(f, s_values);
        }
        if (validate->parsed()) return cmd_validate(f.seed);
        if (oracle->parsed()) return cmd_oracle(f, query, N, K, draws, theta);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
