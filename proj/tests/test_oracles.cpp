#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gct/generators.hpp"
#include "gct/oracles.hpp"
#include "gct/rng.hpp"
#include "test_oracle_helpers.hpp"

using namespace gct;

TEST_CASE("distance to independent set") {
    CHECK(distance_to_indep_set(testutil::cycle(5), 3).edit_count == 1);
    CHECK(distance_to_indep_set(generate({Model::Complete, 5}), 3).edit_count == 3);
    CHECK(distance_to_indep_set(generate({Model::Empty, 8}), 5).edit_count == 0);

    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        int n = 5 + int(rng.below(8));
        int m = 2 + int(rng.below(std::uint64_t(n - 2)));
        Graph g = generate({Model::Gnp, n, rng.uniform(), 0.0, {}, rng.next()});
        auto rep = distance_to_indep_set(g, m);
        CHECK(rep.edit_count == testutil::brute_indep_set_distance(g, m));
        CHECK(rep.witness_set.size() == m);
        CHECK(g.edges_within(rep.witness_set.bits()) == rep.edit_count);
    }

    CHECK_THROWS_AS(distance_to_indep_set(generate({Model::Empty, 60}), 30),
                    std::invalid_argument);  // above exhaustive cap
}

TEST_CASE("distance to clique and complement duality") {
    CHECK(distance_to_clique(generate({Model::Complete, 5}), 3).edit_count == 0);
    CHECK(distance_to_clique(generate({Model::Empty, 5}), 3).edit_count == 3);
    CHECK(distance_to_clique(testutil::cycle(5), 3).edit_count == 1);

    Rng rng(15);
    for (int i = 0; i < 30; ++i) {
        int n = 6 + int(rng.below(7));
        int m = 2 + int(rng.below(4));
        Graph g = generate({Model::Gnp, n, rng.uniform(), 0.0, {}, rng.next()});
        CHECK(distance_to_clique(g, m).edit_count ==
              distance_to_indep_set(complement(g), m).edit_count);
    }
}

TEST_CASE("distance to k-colorable") {
    CHECK(distance_to_k_colorable(testutil::cycle(5), 2).edit_count == 1);
    CHECK(distance_to_k_colorable(generate({Model::CompleteMultipartite, 6, 0, 0,
                                            {3, 3}}), 2).edit_count == 0);
    CHECK(distance_to_k_colorable(generate({Model::Complete, 4}), 2).edit_count == 2);

    Rng rng(25);
    for (int i = 0; i < 25; ++i) {
        int n = 4 + int(rng.below(6));
        int k = 2 + int(rng.below(3));
        Graph g = generate({Model::Gnp, n, rng.uniform(), 0.0, {}, rng.next()});
        auto rep = distance_to_k_colorable(g, k);
        CHECK(rep.edit_count == testutil::brute_k_color_distance(g, k));
        // Witness achieves the reported count.
        long long mono = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) &&
                    rep.witness_partition[u] == rep.witness_partition[v])
                    ++mono;
        CHECK(mono == rep.edit_count);
    }
}

TEST_CASE("complete graph closed forms match the exhaustive oracle") {
    for (int n = 2; n <= 12; ++n) {
        for (int m = 1; m <= n; ++m)
            CHECK(complete_graph_indep_set_distance(n, m) ==
                  distance_to_indep_set(generate({Model::Complete, n}), m).edit_count);
        for (int k = 1; k <= 4; ++k) {
            if (std::pow(double(k), n - 1) > 2e6) continue;
            CHECK(complete_graph_k_colorable_distance(n, k) ==
                  distance_to_k_colorable(generate({Model::Complete, n}), k)
                      .edit_count);
        }
    }
}

TEST_CASE("hypergeometric tail") {
    CHECK(hypergeometric_tail({10, 4, 3, 0}) == doctest::Approx(1.0));
    CHECK(hypergeometric_tail({10, 4, 3, 4}) == doctest::Approx(0.0));
    CHECK(hypergeometric_tail({5, 3, 2, 2}) == doctest::Approx(0.3));  // C(3,2)/C(5,2)

    // Monotone non-increasing in theta.
    for (long long theta = 0; theta <= 20; ++theta)
        CHECK(hypergeometric_tail({60, 30, 20, theta}) + 1e-15 >=
              hypergeometric_tail({60, 30, 20, theta + 1}));
}

TEST_CASE("chernoff bound") {
    CHECK(chernoff_bound({100, 50, 10, 5}) == doctest::Approx(1.0));  // theta = E[X]
    CHECK(chernoff_bound({100, 50, 10, 8}) == doctest::Approx(std::exp(-9.0 / 13)));
    CHECK_THROWS_AS(chernoff_bound({100, 50, 10, 3}), std::invalid_argument);

    // Dominates the exact tail across a parameter grid.
    for (long long N : {20, 50, 100, 200})
        for (long long K : {N / 4, N / 2, 3 * N / 4})
            for (long long draws : {N / 10 + 1, N / 4, N / 2}) {
                long long mean_ceil = (draws * K + N - 1) / N;
                for (long long theta = mean_ceil; theta <= std::min(draws, K);
                     theta += 2)
                    CHECK(chernoff_bound({N, K, draws, theta}) + 1e-12 >=
                          hypergeometric_tail({N, K, draws, theta}));
            }
}

TEST_CASE("hypergeometric median") {
    CHECK(hypergeometric_median_check(100, 50, 10));  // Pr[X >= 5] >= 1/2
    CHECK(hypergeometric_median_check(30, 30, 7));    // K = N forces X = draws
    for (long long N : {10, 40, 120, 200})
        for (long long K = 0; K <= N; K += N / 5)
            for (long long draws = 0; draws <= N; draws += N / 5)
                CHECK(hypergeometric_median_check(N, K, draws));
}
