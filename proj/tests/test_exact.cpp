#include <doctest.h>

#include <stdexcept>

#include "gct/exact.hpp"
#include "gct/generators.hpp"
#include "gct/rng.hpp"
#include "test_oracle_helpers.hpp"

using namespace gct;

TEST_CASE("independent set decision on fixed graphs") {
    Graph k7 = generate({Model::Complete, 7});
    CHECK(!max_independent_set_at_least(k7, 2).found);
    CHECK(max_independent_set_at_least(generate({Model::Empty, 6}), 6).found);

    Graph c5 = testutil::cycle(5);
    CHECK(!max_independent_set_at_least(c5, 3).found);
    CHECK(max_independent_set_at_least(c5, 2).found);
}

TEST_CASE("independent set decision agrees with exhaustive enumeration") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        int n = 6 + int(rng.below(11));  // up to 16
        Graph g = generate({Model::Gnp, n, 0.2 + 0.6 * rng.uniform(), 0.0, {},
                            rng.next()});
        int brute = testutil::brute_max_independent_set(g);
        for (int m : {brute - 1, brute, brute + 1}) {
            if (m < 0 || m > n) continue;
            auto r = max_independent_set_at_least(g, m);
            CHECK(r.found == (m <= brute));
            if (r.found) {
                CHECK(g.is_independent(*r.witness));
                CHECK(r.witness->size() >= m);
            }
        }
    }
}

TEST_CASE("k-colorability agrees with exhaustive enumeration") {
    CHECK(is_k_colorable(generate({Model::Empty, 5}), 1).colorable);
    CHECK(!is_k_colorable(testutil::cycle(5), 2).colorable);
    CHECK(is_k_colorable(testutil::cycle(5), 3).colorable);

    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        int n = 4 + int(rng.below(9));  // up to 12
        int k = 2 + int(rng.below(3));  // up to 4
        Graph g = generate({Model::Gnp, n, 0.3 + 0.5 * rng.uniform(), 0.0, {},
                            rng.next()});
        auto r = is_k_colorable(g, k);
        CHECK(r.colorable == testutil::brute_k_colorable(g, k));
        if (r.colorable) {
            CHECK(g.is_proper_coloring(*r.witness));
            for (int c : *r.witness) CHECK((c >= 0 && c < k));
        }
    }
}

TEST_CASE("clique decision via complement") {
    Graph g = generate({Model::Gnp, 14, 0.6, 0.0, {}, 555});
    Graph gc = complement(g);
    for (int m = 1; m <= 6; ++m)
        CHECK(max_clique_at_least(g, m).found ==
              max_independent_set_at_least(gc, m).found);
}

TEST_CASE("maximal independent set helpers") {
    Graph c5 = testutil::cycle(5);
    auto all = all_maximal_independent_sets(c5);
    CHECK(all.size() == 5);  // {i, i+2} for each i
    for (const auto& s : all) {
        CHECK(c5.is_independent(s));
        CHECK(s.size() == 2);
    }

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = generate({Model::Gnp, 30, 0.4, 0.0, {}, seed});
        VertexSet s = random_maximal_independent_set(g, seed);
        CHECK(g.is_independent(s));
        // Maximality: every outside vertex has a neighbor inside.
        for (int v = 0; v < g.n(); ++v)
            if (!s.contains(v)) CHECK(g.neighbors(v).intersects(s.bits()));
    }
}
