#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "gct/generators.hpp"
#include "gct/graph.hpp"
#include "gct/rng.hpp"
#include "test_oracle_helpers.hpp"

using namespace gct;

TEST_CASE("build_graph basics") {
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(path.edge_count() == 2);
    CHECK(path.adjacent(0, 1));
    CHECK(!path.adjacent(0, 2));

    CHECK(build_graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);  // dedup
    CHECK_THROWS_AS(build_graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("degree sum equals twice edge count on random graphs") {
    for (int i = 0; i < 30; ++i) {
        Graph g = generate({Model::Gnp, 20, 0.4, 0.0, {}, std::uint64_t(i)});
        long long deg_sum = 0;
        for (int v = 0; v < g.n(); ++v) {
            deg_sum += g.degree(v);
            CHECK(!g.adjacent(v, v));
            for (int u = 0; u < g.n(); ++u) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
        CHECK(deg_sum == 2 * g.edge_count());
    }
}

TEST_CASE("complement") {
    Graph k3 = generate({Model::Complete, 3});
    CHECK(complement(k3).edge_count() == 0);
    CHECK(complement(build_graph(5, {})).edge_count() == 10);

    // C_5 complement is the Petersen-style pentagram on the same vertices.
    Graph c5c = complement(testutil::cycle(5));
    CHECK(c5c.edge_count() == 5);
    for (auto [u, v] : {std::pair{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}})
        CHECK(c5c.adjacent(u, v));

    for (int i = 0; i < 20; ++i) {
        Graph g = generate({Model::Gnp, 15, 0.5, 0.0, {}, std::uint64_t(100 + i)});
        Graph cc = complement(complement(g));
        CHECK(cc.edge_count() == g.edge_count());
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v) CHECK(cc.adjacent(u, v) == g.adjacent(u, v));
    }
}

TEST_CASE("induced subgraph") {
    Graph c5 = testutil::cycle(5);
    std::vector<int> ids;
    Graph sub = induced_subgraph(c5, VertexSet(5, {0, 1, 2}), &ids);
    CHECK(sub.n() == 3);
    CHECK(sub.edge_count() == 2);  // path 0-1-2
    CHECK(ids == std::vector<int>{0, 1, 2});

    CHECK(induced_subgraph(c5, VertexSet(5)).n() == 0);
    Graph full = induced_subgraph(c5, VertexSet::full(5));
    CHECK(full.edge_count() == 5);
}

TEST_CASE("independent iff clique in complement") {
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        Graph g = generate({Model::Gnp, 12, 0.5, 0.0, {}, std::uint64_t(i)});
        Graph gc = complement(g);
        VertexSet s(12);
        for (int v = 0; v < 12; ++v)
            if (rng.uniform() < 0.4) s.add(v);
        CHECK(g.is_independent(s) == gc.is_clique(s));
    }
}

TEST_CASE("edge list round trip and parsing") {
    Graph g = generate({Model::Gnp, 10, 0.5, 0.0, {}, 42});
    std::ostringstream os;
    write_edge_list(os, g);
    std::istringstream is(os.str());
    Graph h = read_edge_list(is);
    CHECK(h.n() == g.n());
    CHECK(h.edge_count() == g.edge_count());
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) CHECK(h.adjacent(u, v) == g.adjacent(u, v));

    std::istringstream messy("# comment\n3 2\n\n2 1  # trailing\n0 1\n");
    Graph m = read_edge_list(messy);
    CHECK(m.n() == 3);
    CHECK(m.edge_count() == 2);
    CHECK(m.adjacent(1, 2));
}
