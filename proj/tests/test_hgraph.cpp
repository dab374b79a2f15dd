#include <catch2/catch_amalgamated.hpp>

#include "lpt/generators.hpp"
#include "lpt/hgraph.hpp"
#include "support/naive.hpp"

using namespace lpt;

namespace {

HRepresentation k2_rep(int internal, const std::vector<std::vector<int>>& segments) {
    HRepresentation rep =
        make_skeleton(patterns::complete(2), {{{0, 1}, internal + 1}});
    rep.phi.assign(segments.size(), VertexSet(rep.h_phi.vertex_count()));
    for (size_t v = 0; v < segments.size(); v++)
        for (int x : segments[v]) rep.phi[v].add(x);
    return rep;
}

} // namespace

TEST_CASE("skeleton labels round trip") {
    HRepresentation rep = make_skeleton(patterns::complete(3), {{{0, 1}, 3}, {{1, 2}, 2}});
    REQUIRE(rep.h_phi.vertex_count() == 3 + 2 + 1);
    for (int x = 0; x < rep.h_phi.vertex_count(); x++)
        CHECK(rep.vertex_by_label(rep.label(x)) == x);
    CHECK(rep.label(0) == "v0");
    CHECK(rep.label(3) == "e0-1/1");
}

TEST_CASE("realize") {
    SECTION("overlapping segments on K2 give K2") {
        // h_phi: v0(0) - i1(2) - i2(3) - v1(1)
        auto rep = k2_rep(2, {{0, 2}, {2, 3, 1}});
        Graph g = realize(rep);
        REQUIRE(g.vertex_count() == 2);
        CHECK(g.adjacent(0, 1));
    }
    SECTION("disjoint segments realize an edgeless pair") {
        auto rep = k2_rep(2, {{0, 2}, {3, 1}});
        Graph g = realize(rep);
        CHECK(g.edge_count() == 0);
    }
    SECTION("disconnected segments are rejected by name") {
        auto rep = k2_rep(2, {{0, 3}, {2}});
        REQUIRE_THROWS_WITH(realize(rep), Catch::Matchers::ContainsSubstring("vertex 0"));
    }
    SECTION("hand-built five-segment instance matches its intended graph") {
        // host = paw (triangle 0-1-2 with pendant 3 at 0); edge 0-3 subdivided once
        HRepresentation rep = make_skeleton(
            Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}), {{{0, 3}, 2}});
        // h_phi ids: hosts 0..3, internal of 0-3 is 4
        rep.phi.assign(5, VertexSet(rep.h_phi.vertex_count()));
        auto set = [&](int v, std::initializer_list<int> xs) {
            for (int x : xs) rep.phi[size_t(v)].add(x);
        };
        set(0, {0, 4});     // around the pendant corner
        set(1, {0, 1});     // edge 0-1
        set(2, {1, 2});     // edge 1-2
        set(3, {2, 0});     // edge 2-0
        set(4, {4, 3});     // pendant tip
        Graph g = realize(rep);
        // intersections worked out by hand
        Graph expected = Graph::from_edge_list(
            5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3}});
        REQUIRE(g == expected);
    }
}

TEST_CASE("is_nice and normalize_nice") {
    SECTION("already nice representations come back unchanged") {
        auto inst = gen_interval(3, 6);
        REQUIRE(is_nice(inst.rep));
        HRepresentation norm = normalize_nice(inst.rep);
        CHECK(representation_to_json(norm) == representation_to_json(inst.rep));
    }
    SECTION("an uncovered host endpoint slides inward") {
        // v0(0) - i1(2) - i2(3) - i3(4) - v1(1); v1 uncovered
        auto rep = k2_rep(3, {{0, 2}, {2, 3, 4}});
        REQUIRE_FALSE(is_nice(rep));
        HRepresentation norm = normalize_nice(rep);
        std::string why;
        REQUIRE(is_nice(norm, &why));
        CHECK(realize(norm) == realize(rep));
        CHECK(norm.h_phi.vertex_count() == 4);
    }
    SECTION("uncovered middle vertex bridged around a cycle host") {
        // host K3, edge 0-1 subdivided twice: v0(0) v1(1) v2(2) i1(3) i2(4)
        HRepresentation rep = make_skeleton(patterns::complete(3), {{{0, 1}, 3}});
        rep.phi.assign(2, VertexSet(rep.h_phi.vertex_count()));
        rep.phi[0] = VertexSet(5, {0, 3});       // covers v0 and first internal
        rep.phi[1] = VertexSet(5, {0, 1, 2});    // covers the rest of the triangle
        REQUIRE_FALSE(is_nice(rep)); // second internal i2 uncovered
        HRepresentation norm = normalize_nice(rep);
        std::string why;
        REQUIRE(is_nice(norm, &why));
        CHECK(realize(norm) == realize(rep));
    }
    SECTION("uncontractible gap is rejected with the offending edge") {
        // two covered halves that never meet; G would change under contraction
        auto rep = k2_rep(3, {{0, 2}, {4, 1}});
        REQUIRE_THROWS_WITH(normalize_nice(rep),
                            Catch::Matchers::ContainsSubstring("cannot be contracted"));
    }
    SECTION("uncovered degree-3 host vertex is rejected") {
        HRepresentation rep = make_skeleton(patterns::claw(),
                                            {{{0, 1}, 2}, {{0, 2}, 2}, {{0, 3}, 2}});
        // internals: 0-1 -> 4, 0-2 -> 5, 0-3 -> 6
        rep.phi.assign(3, VertexSet(rep.h_phi.vertex_count()));
        rep.phi[0] = VertexSet(7, {4, 1});
        rep.phi[1] = VertexSet(7, {5, 2});
        rep.phi[2] = VertexSet(7, {6, 3});
        REQUIRE_THROWS_WITH(normalize_nice(rep),
                            Catch::Matchers::ContainsSubstring("branch vertex"));
    }
    SECTION("normalization is idempotent", "[property]") {
        auto rep = k2_rep(3, {{0, 2}, {2, 3, 4}});
        HRepresentation once = normalize_nice(rep);
        HRepresentation twice = normalize_nice(once);
        CHECK(representation_to_json(once) == representation_to_json(twice));
    }
}

TEST_CASE("helly bag") {
    SECTION("K2 on K2") {
        auto rep = k2_rep(1, {{0, 2}, {2, 1}});
        TreeDecomposition td = decompose(rep);
        int t = helly_bag(rep, td);
        // the bag's segment owners must hit every longest path
        VertexSet owners(2);
        td.bags[size_t(t)].for_each([&](VertexId x) { owners |= rep.segment_owners(x); });
        CHECK(is_transversal(realize(rep), owners));
    }
    SECTION("P4 as an interval representation") {
        // positions 0..4 as internals; consecutive unit segments overlap in a point
        auto rep = k2_rep(5, {{2, 3}, {3, 4}, {4, 5}, {5, 6}});
        Graph g = realize(rep);
        REQUIRE(g == patterns::path(4));
        TreeDecomposition td = decompose(rep);
        int t = helly_bag(rep, td);
        VertexSet owners(4);
        td.bags[size_t(t)].for_each([&](VertexId x) { owners |= rep.segment_owners(x); });
        CHECK(is_transversal(g, owners));
    }
}

TEST_CASE("intermediate graph") {
    SECTION("bag inside the host keeps H unchanged") {
        auto rep = k2_rep(0, {{0, 1}});
        TreeDecomposition td;
        td.bags = {VertexSet(2, {0, 1})};
        td.tree = Graph::from_edge_list(1, {});
        auto inter = intermediate_graph(rep, td, 0);
        CHECK(inter.graph.vertex_count() == 2);
        CHECK(inter.graph.edge_count() == 1);
    }
    SECTION("one interior bag vertex splits the edge") {
        // v0 - i1 - i2 - i3 - v1, bag keeps i2 (id 3)
        auto rep = k2_rep(3, {{0, 2, 3}, {3, 4, 1}});
        TreeDecomposition td;
        td.bags = {VertexSet(5, {3})};
        td.tree = Graph::from_edge_list(1, {});
        auto inter = intermediate_graph(rep, td, 0);
        REQUIRE(inter.graph.vertex_count() == 3); // v0, v1, i2
        REQUIRE(inter.graph.edge_count() == 2);
        // h_phi remains a subdivision: the two edge paths partition the path
        int total_internal = 0;
        for (const auto& [e, path] : inter.edge_paths) total_internal += int(path.size()) - 2;
        CHECK(total_internal == 2);
    }
}

TEST_CASE("reach takes the longest fully-owned prefix") {
    auto rep = k2_rep(3, {{0}, {0, 2, 3, 4, 1}, {0, 2, 4}});
    const auto& path = rep.edge_paths.at({0, 1});
    CHECK(reach(rep, 0, path) == 1);
    CHECK(reach(rep, 1, path) == int(path.size()));
    CHECK(reach(rep, 2, path) == 2); // gap at the second internal
    REQUIRE_THROWS_AS(reach(rep, 0, std::vector<VertexId>{2, 3}), InvalidArgument);
}

TEST_CASE("extract_q end to end") {
    SECTION("K2 on K2") {
        auto rep = k2_rep(1, {{0, 2}, {2, 1}});
        TreeDecomposition td = decompose(rep);
        ExtractionTrace trace;
        auto cert = extract_q(rep, td, {}, &trace);
        CHECK(cert.verified);
        CHECK(trace.q.size() <= 2);
        CHECK(trace.s2_ok);
        CHECK_FALSE(trace.theorem_bound.has_value()); // |E(H)| = 1 is suppressed
    }
    SECTION("generated interval instances") {
        for (std::uint64_t seed : {11u, 12u, 13u}) {
            auto inst = gen_interval(seed, 8);
            TreeDecomposition td = decompose(inst.rep);
            ExtractionTrace trace;
            auto cert = extract_q(inst.rep, td, {}, &trace);
            REQUIRE(cert.verified);
            REQUIRE(trace.s1_ok);
            REQUIRE(trace.s2_ok);
            auto claims = verify_claims(trace, inst.graph);
            INFO(claims.detail);
            REQUIRE(claims.all());
        }
    }
    SECTION("generated circular-arc instances respect the K3 bound") {
        for (std::uint64_t seed : {21u, 22u, 23u}) {
            auto inst = gen_circular_arc(seed, 7);
            TreeDecomposition td = decompose(inst.rep);
            ExtractionTrace trace;
            auto cert = extract_q(inst.rep, td, {}, &trace);
            REQUIRE(cert.verified);
            REQUIRE(trace.theorem_bound.has_value());
            // 4 (tw(K3)+1) |E(K3)| with the exact decomposition
            if (td.exact_width) {
                REQUIRE(*trace.theorem_bound <= 4 * 3 * 3);
                REQUIRE(trace.theorem_ok);
            }
            auto claims = verify_claims(trace, inst.graph);
            INFO(claims.detail);
            REQUIRE(claims.all());
        }
    }
}

TEST_CASE("representation json round trip", "[property]") {
    for (std::uint64_t seed : {31u, 32u}) {
        auto inst = gen_circular_arc(seed, 6);
        nlohmann::json j = representation_to_json(inst.rep);
        HRepresentation back = representation_from_json(j);
        CHECK(realize(back) == inst.graph);
        CHECK(representation_to_json(back) == j);
    }
    // malformed documents are rejected
    REQUIRE_THROWS_AS(representation_from_json(nlohmann::json::object()), InvalidArgument);
}

TEST_CASE("tree-host representations realize chordal graphs", "[property]") {
    for (std::uint64_t seed = 0; seed < 6; seed++) {
        auto inst = gen_chordal(seed, 8, 0.4);
        CHECK(is_chordal(realize(inst.rep)).has_value());
    }
    for (std::uint64_t seed = 0; seed < 6; seed++) {
        auto inst = gen_interval(seed, 8);
        CHECK(is_chordal(inst.graph).has_value());
    }
}
