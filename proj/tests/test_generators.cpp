#include <catch2/catch_amalgamated.hpp>

#include "lpt/generators.hpp"
#include "lpt/io.hpp"
#include "lpt/recognizers.hpp"

using namespace lpt;

TEST_CASE("splitmix64 is the published recurrence") {
    // reference values for seed 0 (Steele, Lea & Flood / Vigna)
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFull);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
    CHECK(rng.next() == 0x06C45D188009454Full);
}

TEST_CASE("generators are seed-deterministic") {
    auto a = gen_chordal(9, 9, 0.5);
    auto b = gen_chordal(9, 9, 0.5);
    REQUIRE(a.graph == b.graph);
    REQUIRE(representation_to_json(a.rep) == representation_to_json(b.rep));

    auto ia = gen_interval(5, 7);
    auto ib = gen_interval(5, 7);
    REQUIRE(ia.graph == ib.graph);
    REQUIRE(ia.intervals == ib.intervals);

    auto ca = gen_circular_arc(5, 7);
    auto cb = gen_circular_arc(5, 7);
    REQUIRE(ca.graph == cb.graph);

    // different seeds give different instances (overwhelmingly)
    CHECK(!(gen_chordal(1, 9, 0.5).graph == gen_chordal(2, 9, 0.5).graph));
}

TEST_CASE("gen_chordal output is chordal, connected, and matches its model") {
    for (std::uint64_t seed = 1; seed <= 10; seed++) {
        auto inst = gen_chordal(seed, 8, 0.4);
        REQUIRE(is_chordal(inst.graph).has_value());
        REQUIRE(is_connected(inst.graph));
        REQUIRE(realize(inst.rep) == inst.graph);
        REQUIRE(is_nice(inst.rep));
    }
    CHECK(gen_chordal(3, 1, 0.5).graph.vertex_count() == 1);
    // full density grows every subtree to the whole host
    CHECK(gen_chordal(4, 5, 1.0).graph == patterns::complete(5));
}

TEST_CASE("gen_chordal_peo output is chordal and connected") {
    for (std::uint64_t seed = 1; seed <= 10; seed++) {
        Graph g = gen_chordal_peo(seed, 9, 0.5);
        REQUIRE(is_chordal(g).has_value());
        REQUIRE(is_connected(g));
    }
}

TEST_CASE("gen_interval matches its model and stays in class") {
    for (std::uint64_t seed = 1; seed <= 3; seed++) {
        auto inst = gen_interval(seed, 8);
        // dual route: arithmetic overlap vs segment intersection
        REQUIRE(realize(inst.rep) == inst.graph);
        REQUIRE(is_nice(inst.rep));
        REQUIRE(is_connected(inst.graph));
        REQUIRE(is_chordal(inst.graph).has_value());
    }
    CHECK(gen_interval(2, 1).graph.vertex_count() == 1);
}

TEST_CASE("nested intervals wrap to a complete graph") {
    // hand model: [0,4] ⊃ [1,3] ⊃ [2,2] on positions 0..4 (ids 2..6)
    HRepresentation rep = make_skeleton(patterns::complete(2), {{{0, 1}, 6}});
    rep.phi.assign(3, VertexSet(rep.h_phi.vertex_count()));
    for (int k = 0; k <= 4; k++) rep.phi[0].add(2 + k);
    for (int k = 1; k <= 3; k++) rep.phi[1].add(2 + k);
    rep.phi[2].add(2 + 2);
    CHECK(realize(rep) == patterns::complete(3));
}

TEST_CASE("gen_circular_arc matches its model") {
    for (std::uint64_t seed = 1; seed <= 3; seed++) {
        auto inst = gen_circular_arc(seed, 8);
        REQUIRE(realize(inst.rep) == inst.graph);
        REQUIRE(is_nice(inst.rep));
        REQUIRE(is_connected(inst.graph));
    }
}

TEST_CASE("gen_class_filtered") {
    SECTION("produces members of the class") {
        auto g = gen_class_filtered(12, 10, 0.5, {patterns::path(5)});
        REQUIRE(g.has_value());
        CHECK(is_connected(*g));
        CHECK_FALSE(contains_induced(*g, patterns::path(5)).has_value());

        auto bc = gen_class_filtered(77, 7, 0.4, {patterns::bull(), patterns::chair()});
        REQUIRE(bc.has_value());
        CHECK_FALSE(contains_induced(*bc, patterns::bull()).has_value());
        CHECK_FALSE(contains_induced(*bc, patterns::chair()).has_value());
    }
    SECTION("p=1 with nothing forbidden gives the complete graph") {
        auto g = gen_class_filtered(1, 6, 1.0, {});
        REQUIRE(g.has_value());
        CHECK(*g == patterns::complete(6));
    }
    SECTION("an impossible class signals budget exhaustion") {
        // connected P3-free graphs are complete; p=0.3 on n=10 never samples K10
        auto g = gen_class_filtered(3, 10, 0.3, {patterns::path(3)}, 60);
        CHECK_FALSE(g.has_value());
    }
}

TEST_CASE("fixture graph") {
    Graph wz = fixture_walther_zamfirescu();
    REQUIRE(wz.vertex_count() == 12);
    REQUIRE(wz.edge_count() == 15);
    REQUIRE(is_connected(wz));
    // canonical serialization is stable; the checked-in file must match it
    CHECK(hex64(graph_hash(wz)) == hex64(fnv1a(write_edge_list(wz))));
}
