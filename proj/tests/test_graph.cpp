#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "lpt/generators.hpp"
#include "lpt/graph.hpp"
#include "lpt/io.hpp"
#include "lpt/patterns.hpp"
#include "support/naive.hpp"

using namespace lpt;

TEST_CASE("from_edge_list builds simple graphs") {
    Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(p4.vertex_count() == 4);
    REQUIRE(p4.edge_count() == 3);
    REQUIRE(p4.adjacent(0, 1));
    REQUIRE_FALSE(p4.adjacent(0, 2));

    Graph k1 = Graph::from_edge_list(1, {});
    REQUIRE(k1.vertex_count() == 1);
    REQUIRE(k1.edge_count() == 0);

    // duplicates collapse
    Graph g = Graph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 2}});
    REQUIRE(g.edge_count() == 2);
}

TEST_CASE("from_edge_list rejects bad edges") {
    REQUIRE_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), InvalidArgument);
    REQUIRE_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), InvalidArgument);
    REQUIRE_THROWS_WITH(Graph::from_edge_list(3, {{1, 1}}),
                        Catch::Matchers::ContainsSubstring("self-loop"));
}

TEST_CASE("components") {
    Graph p4 = patterns::path(4);
    SECTION("isolated endpoints") {
        auto comps = components(p4, VertexSet(4, {0, 3}));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == VertexSet(4, {0}));
        CHECK(comps[1] == VertexSet(4, {3}));
    }
    SECTION("whole cycle is connected") {
        Graph c5 = patterns::cycle(5);
        auto comps = components(c5, c5.vertex_set());
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].size() == 5);
    }
    SECTION("edge plus isolate") {
        auto comps = components(p4, VertexSet(4, {0, 1, 3}));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == VertexSet(4, {0, 1}));
        CHECK(comps[1] == VertexSet(4, {3}));
    }
}

TEST_CASE("components form a partition", "[property]") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 50; trial++) {
        int n = 2 + int(rng.below(10));
        Graph g = testing::random_connected(rng, n, 0.3);
        VertexSet within(n);
        for (int v = 0; v < n; v++)
            if (rng.chance(0.6)) within.add(v);
        auto comps = components(g, within);

        VertexSet unionAll(n);
        int total = 0;
        for (const auto& c : comps) {
            REQUIRE_FALSE(unionAll.intersects(c));
            unionAll |= c;
            total += c.size();
            // each piece connected in g[within]
            REQUIRE(components(g, c).size() == (c.empty() ? 0u : 1u));
        }
        REQUIRE(unionAll == within);
        REQUIRE(total == within.size());
        // no edges between pieces
        for (size_t i = 0; i < comps.size(); i++)
            for (size_t j = i + 1; j < comps.size(); j++)
                REQUIRE(boundary(g, comps[i], comps[j]).empty());
    }
}

TEST_CASE("boundary") {
    Graph p4 = patterns::path(4);
    CHECK(boundary(p4, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) == VertexSet(4, {1}));
    Graph k4 = patterns::complete(4);
    CHECK(boundary(k4, VertexSet(4, {0}), VertexSet(4, {1, 2, 3})) == VertexSet(4, {0}));
    CHECK(boundary(p4, VertexSet(4, {0}), VertexSet(4, {2, 3})).empty());
    REQUIRE_THROWS_AS(boundary(p4, VertexSet(4, {0, 1}), VertexSet(4, {1})), InvalidArgument);
}

TEST_CASE("boundary is contained in x and monotone in y", "[property]") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        int n = 3 + int(rng.below(8));
        Graph g = testing::random_connected(rng, n, 0.4);
        VertexSet x(n), y1(n), y2(n);
        for (int v = 0; v < n; v++) {
            if (rng.chance(0.4)) x.add(v);
            else if (rng.chance(0.5)) y1.add(v);
        }
        y2 = y1;
        (g.vertex_set() - x - y1).for_each([&](VertexId v) {
            if (rng.chance(0.4)) y2.add(v);
        });
        REQUIRE(boundary(g, x, y1).is_subset_of(x));
        REQUIRE(boundary(g, x, y1).is_subset_of(boundary(g, x, y2)));
    }
}

TEST_CASE("dominates") {
    Graph star = patterns::claw(); // K_{1,3}, center 0
    CHECK(dominates(star, VertexSet(4, {0}), star.vertex_set()));
    Graph p4 = patterns::path(4);
    CHECK_FALSE(dominates(p4, VertexSet(4, {0}), p4.vertex_set()));
    CHECK(dominates(p4, VertexSet(4, {1, 2}), p4.vertex_set()));
}

TEST_CASE("is_connected_dominating") {
    Graph p4 = patterns::path(4);
    CHECK(is_connected_dominating(p4, VertexSet(4, {1, 2})));
    CHECK_FALSE(is_connected_dominating(p4, VertexSet(4, {0, 3})));
    Graph c5 = patterns::cycle(5);
    CHECK(is_connected_dominating(c5, VertexSet(5, {0, 1, 2})));
    REQUIRE_THROWS_AS(is_connected_dominating(p4, VertexSet(4)), InvalidArgument);
}

TEST_CASE("connected dominating sets dominate everything", "[property]") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; trial++) {
        int n = 2 + int(rng.below(9));
        Graph g = testing::random_connected(rng, n, 0.35);
        VertexSet d(n);
        for (int v = 0; v < n; v++)
            if (rng.chance(0.5)) d.add(v);
        if (d.empty()) d.add(0);
        if (is_connected_dominating(g, d)) REQUIRE(dominates(g, d, g.vertex_set()));
    }
}

TEST_CASE("neighborhood and clique predicates") {
    Graph p4 = patterns::path(4);
    CHECK(closed_neighborhood(p4, VertexSet(4, {1})) == VertexSet(4, {0, 1, 2}));
    Graph k4 = patterns::complete(4);
    CHECK(is_clique(k4, VertexSet(4, {0, 1, 2})));
    CHECK_FALSE(is_clique(p4, VertexSet(4, {0, 1, 2})));
    // complete bipartite K_{2,3}, sides {0,1} and {2,3,4}
    Graph k23 = Graph::from_edge_list(
        5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(is_complete_between(k23, VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4})));
    CHECK_FALSE(is_complete_between(p4, VertexSet(4, {0}), VertexSet(4, {2})));
}

TEST_CASE("induced subgraph keeps the id maps") {
    Graph c5 = patterns::cycle(5);
    auto sub = induced(c5, VertexSet(5, {1, 2, 4}));
    REQUIRE(sub.graph.vertex_count() == 3);
    REQUIRE(sub.graph.edge_count() == 1); // just 1-2
    CHECK(sub.parent_of(sub.local_of(4)) == 4);
    CHECK(sub.lift(sub.restrict(VertexSet(5, {1, 4}))) == VertexSet(5, {1, 4}));
}

TEST_CASE("operations are pure") {
    SplitMix64 rng(5);
    Graph g = testing::random_connected(rng, 9, 0.4);
    VertexSet m(9, {0, 2, 5});
    auto a = components(g, g.vertex_set() - m);
    auto b = components(g, g.vertex_set() - m);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); i++) REQUIRE(a[i] == b[i]);
}

TEST_CASE("edge-list io round trip", "[property]") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; trial++) {
        int n = 1 + int(rng.below(12));
        Graph g = testing::random_connected(rng, n, 0.3);
        std::istringstream in(write_edge_list(g));
        Graph back = read_edge_list(in);
        REQUIRE(back == g);
        REQUIRE(graph_hash(back) == graph_hash(g));
    }
}

TEST_CASE("edge-list parser accepts comments and reports line numbers") {
    std::istringstream ok("# a graph\n3 2\n0 1 # edge\n\n1 2\n");
    Graph g = read_edge_list(ok);
    REQUIRE(g.edge_count() == 2);

    std::istringstream missing("3 2\n0 1\n");
    REQUIRE_THROWS_AS(read_edge_list(missing), ParseError);

    std::istringstream bad("3 2\n0 1\n7 2\n");
    try {
        read_edge_list(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    std::istringstream loop("2 1\n0 0\n");
    REQUIRE_THROWS_WITH(read_edge_list(loop), Catch::Matchers::ContainsSubstring("self-loop"));
}

TEST_CASE("path helpers") {
    Graph p4 = patterns::path(4);
    CHECK(is_path(p4, Path{0, 1, 2, 3}));
    CHECK_FALSE(is_path(p4, Path{0, 2}));
    CHECK_FALSE(is_path(p4, Path{0, 1, 0}));
    CHECK(is_induced_path(p4, Path{0, 1, 2}));
    Graph c4 = patterns::cycle(4);
    CHECK_FALSE(is_induced_path(c4, Path{0, 1, 2, 3}));
    CHECK(Path{3, 2, 1}.canonical() == Path{1, 2, 3});
    CHECK(Path{0, 1, 2}.length() == 2);
}
