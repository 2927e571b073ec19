#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gct/exact.hpp"
#include "gct/generators.hpp"
#include "gct/testers.hpp"
#include "test_oracle_helpers.hpp"

using namespace gct;

TEST_CASE("sample size formulas (frozen hand evaluations)") {
    CHECK(sample_size_indepset(0.5, 0.1, 1.0) == 153);
    CHECK(sample_size_kcol(3, 0.1, 1.0) == 160);

    // Linearity in c before the ceiling.
    double lt = std::log(10.0);
    CHECK(sample_size_indepset(0.5, 0.1, 2.0) ==
          int(std::ceil(2 * 12.5 * lt * lt * lt - 1e-12)));
    CHECK(sample_size_kcol(6, 0.1, 1.0) == int(std::ceil(60 * lt * lt - 1e-12)));
    CHECK_THROWS_AS(sample_size_indepset(0.5, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("dks_params") {
    double l400 = std::log(400.0);
    CHECK(dks_params(10000, 100, 0.5, 1.0) ==
          (long long)std::ceil(400 * l400 * l400 * l400 - 1e-9));
    // Doubling delta divides the leading factor by 4.
    double l100 = std::log(100.0);
    CHECK(dks_params(10000, 100, 1.0, 1.0) ==
          (long long)std::ceil(100 * l100 * l100 * l100 - 1e-9));
    // Limiting behavior: k close to n gives a small clamped sample.
    CHECK(dks_params(100, 99, 1.0, 1.0) == 2);  // base ~1.01, ln clamped to 1
    CHECK_THROWS_AS(dks_params(10, 10, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("indep-set tester degenerates to the exact decision at full sample") {
    // s >= n: accept iff the graph has an independent set of ceil(rho*n).
    Graph g = generate({Model::Gnp, 30, 0.5, 0.0, {}, 12});
    TesterConfig cfg{Property::IndepSet, 0.3, 0, 0.01, 4.0, 0.0, 99, {}};
    TestOutcome out = test_indep_set(g, cfg);
    CHECK(out.sample_size_used == 30);
    CHECK(out.accepted == max_independent_set_at_least(g, 9).found);
    if (out.accepted) {
        CHECK(g.is_independent(*out.witness_set));
        CHECK(out.witness_size >= 9);
    }
}

TEST_CASE("tester determinism") {
    Graph g = generate({Model::Gnp, 80, 0.5, 0.0, {}, 5});
    TesterConfig cfg{Property::IndepSet, 0.4, 0, 0.12, 1.0, 0.0, 4242, {}};
    TestOutcome a = test_indep_set(g, cfg);
    TestOutcome b = test_indep_set(g, cfg);
    CHECK(a.accepted == b.accepted);
    CHECK(a.sample == b.sample);
    CHECK(a.sample_size_used == b.sample_size_used);
}

TEST_CASE("clique tester equals indep-set tester on the complement") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generate({Model::Gnp, 50, 0.5, 0.0, {}, seed});
        TesterConfig cfg{Property::Clique, 0.4, 0, 0.12, 1.0, 0.0, seed * 7 + 1, {}};
        TestOutcome c = test_clique(g, cfg);
        TestOutcome i = test_indep_set(complement(g), cfg);
        CHECK(c.accepted == i.accepted);
        CHECK(c.sample == i.sample);
    }

    // Edgeless graph: no 2-clique exists, full sample rejects.
    Graph e = generate({Model::Empty, 20});
    TesterConfig cfg{Property::Clique, 0.5, 0, 0.01, 4.0, 0.0, 3, {}};
    CHECK(!test_clique(e, cfg).accepted);
}

TEST_CASE("colorability tester is one-sided") {
    // 3-colorable inputs are always accepted, any seed.
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = generate({Model::CompleteMultipartite, 60, 0, 0, {20, 20, 20}});
        TesterConfig cfg{Property::KColorable, 0, 3, 0.2, 1.0, 0.0, seed, {}};
        CHECK(test_k_colorable(g, cfg).accepted);
    }

    // A blow-up containing K_4 in every large sample rejects at k=3.
    Graph k4 = generate({Model::CompleteMultipartite, 40, 0, 0, {10, 10, 10, 10}});
    TesterConfig cfg{Property::KColorable, 0, 3, 0.01, 4.0, 0.0, 11, {}};
    TestOutcome out = test_k_colorable(k4, cfg);
    CHECK(out.sample_size_used == 40);
    CHECK(!out.accepted);
}

TEST_CASE("gap parameter lowers the acceptance threshold") {
    // C_5 has max IS 2 = 0.4n; with rho = 0.5 the plain tester rejects at
    // full sample, but tau = 0.1 accepts (threshold ceil(0.4*5) = 2).
    Graph c5 = testutil::cycle(5);
    TesterConfig plain{Property::IndepSet, 0.5, 0, 0.01, 50.0, 0.0, 8, {}};
    TesterConfig gap = plain;
    gap.gap_tau = 0.1;
    CHECK(!test_indep_set(c5, plain).accepted);
    CHECK(test_indep_set(c5, gap).accepted);
}
