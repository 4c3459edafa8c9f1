#include "doctest.h"

#include <random>

#include "connspace/analysis.hpp"
#include "connspace/catalog.hpp"
#include "connspace/generation.hpp"

using namespace connspace;

namespace {

ConnSpace random_integral(std::mt19937& rng, std::size_t n, int gens) {
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<Subset> g;
    for (int k = 0; k < gens; ++k) g.push_back(Subset{rng() & full});
    return generate(GroundSet::of(n), SubsetFamily(g), true);
}

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("reducibility detects overlapping proper decompositions") {
    ConnSpace s = generate(GroundSet::of(3), SubsetFamily::of({0b011, 0b110}), true);
    CHECK(is_reducible(s, Subset{0b111}));
    CHECK(!is_reducible(s, Subset{0b011}));
    CHECK(!is_reducible(s, Subset{0b001}));

    CHECK(!is_reducible(brunnian(3), Subset{0b111}));
    CHECK_THROWS_AS(is_reducible(s, Subset{0b101}), Error);
    CHECK_THROWS_AS(is_reducible(s, Subset::empty()), Error);
}

TEST_CASE("pair criterion agrees with regeneration-without-the-member") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 4;
        ConnSpace s = random_integral(rng, n, 3);
        for (Subset k : s.structure().members()) {
            if (k.is_empty()) continue;
            std::vector<Subset> rest;
            for (Subset m : s.structure().members())
                if (m != k) rest.push_back(m);
            bool regenerated =
                generate(s.ground(), SubsetFamily(rest), false).is_connected(k);
            CHECK(is_reducible(s, k) == regenerated);
        }
    }
}

TEST_CASE("irreducibles of standard spaces") {
    // Indiscrete on 3 points: pairs cannot be split, the triple can.
    SubsetFamily irr = irreducibles(indiscrete(3));
    CHECK(irr.size() == 6);
    CHECK(irr.contains(Subset{0b011}));
    CHECK(!irr.contains(Subset{0b111}));

    // V-spaces are distinguished: every nonempty member is irreducible.
    CHECK(irreducibles(v_space(4)).size() == v_space(4).structure().size() - 1);
    CHECK(is_distinguished(v_space(4)));
    CHECK(!is_distinguished(indiscrete(3)));
    CHECK(is_distinguished(brunnian(5)));
}

TEST_CASE("irreducibles regenerate the structure") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 1 + rng() % 5;
        ConnSpace s = random_integral(rng, n, 3);
        CHECK(generate(s.ground(), irreducibles(s), true) == s);
    }
    // Also for a plain structure.
    ConnSpace plain = generate(GroundSet::of(4), SubsetFamily::of({0b0011, 0b0110, 0b1000}),
                               false);
    CHECK(generate(plain.ground(), irreducibles(plain), false) == plain);
}

TEST_CASE("irreducible spaces") {
    CHECK(is_irreducible_space(brunnian(3)));
    CHECK(is_irreducible_space(v_space(4)));
    CHECK(!is_irreducible_space(discrete(2)));
    CHECK(!is_irreducible_space(generate(GroundSet::of(3),
                                         SubsetFamily::of({0b011, 0b110}), true)));
    CHECK(is_irreducible_space(indiscrete(1)));
    CHECK(!is_irreducible_space(make_space(GroundSet::of(0), SubsetFamily::of({0}), true)));
}

TEST_CASE("brunnian closure adds exactly the whole carrier") {
    ConnSpace s = brunnian_closure(discrete(4));
    CHECK(s == brunnian(4));
    CHECK(brunnian_closure(brunnian(4)) == brunnian(4));
    ConnSpace t = brunnian_closure(v_space(3));
    CHECK(t == v_space(3));
}

TEST_CASE("generic graph of the Brunnian space is a star") {
    GenericGraph g = generic_graph(brunnian(3));
    REQUIRE(g.vertices.size() == 4);
    CHECK(g.vertices[0] == Subset{0b001});
    CHECK(g.vertices[1] == Subset{0b010});
    CHECK(g.vertices[2] == Subset{0b100});
    CHECK(g.vertices[3] == Subset{0b111});
    REQUIRE(g.edges.size() == 3);
    for (auto [from, to] : g.edges) CHECK(from == 3);
}

TEST_CASE("generic graph of a V-space is a caterpillar chain") {
    GenericGraph g = generic_graph(v_space(4));
    CHECK(g.vertices.size() == 7);
    CHECK(g.edges.size() == 6);
    IndexReport r = connectivity_index(v_space(4));
    CHECK(r.space_index == 3);
    // Heights grow along the chain of initial segments.
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.vertices[v].card() >= 2)
            CHECK(r.heights[v] == g.vertices[v].card() - 1);
        else
            CHECK(r.heights[v] == 0);
    }
}

TEST_CASE("connectivity index of standard spaces") {
    CHECK(connectivity_index(discrete(4)).space_index == 0);
    CHECK(connectivity_index(indiscrete(3)).space_index == 1);
    for (std::size_t n = 2; n <= 6; ++n) {
        CHECK(connectivity_index(brunnian(n)).space_index == 1);
        CHECK(connectivity_index(v_space(n)).space_index == n - 1);
    }
    CHECK_THROWS_AS(connectivity_index(make_space(GroundSet::of(0), SubsetFamily::of({0}), true)),
                    Error);
    ConnSpace plain = make_space(GroundSet::of(2), SubsetFamily::of({0, 0b11}), false);
    CHECK_THROWS_AS(connectivity_index(plain), Error);
}

TEST_CASE("index never exceeds carrier size minus one") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 6;
        ConnSpace s = random_integral(rng, n, 4);
        CHECK(connectivity_index(s).space_index <= n - 1);
    }
}

TEST_CASE("dag validation rejects malformed graphs") {
    CHECK_THROWS_AS(realize_dag(Dag{2, {{0, 2}}}), Error);
    CHECK_THROWS_AS(realize_dag(Dag{2, {{0, 0}}}), Error);
    CHECK_THROWS_AS(realize_dag(Dag{2, {{0, 1}, {1, 0}}}), Error);
}

TEST_CASE("realizing recognizable graphs") {
    ConnSpace lone = realize_dag(Dag{1, {}});
    CHECK(lone == indiscrete(1));

    ConnSpace star = realize_dag(Dag{4, {{3, 0}, {3, 1}, {3, 2}}});
    CHECK(is_isomorphic(star, brunnian(3)).has_value());

    // Two isolated vertices: the discrete two-point space.
    CHECK(is_isomorphic(realize_dag(Dag{2, {}}), discrete(2)).has_value());
}

TEST_CASE("a single covering edge is not a generic graph") {
    CHECK_THROWS_AS(realize_dag(Dag{2, {{0, 1}}}), Error);
    try {
        realize_dag(Dag{2, {{0, 1}}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_realizable);
    }
}

TEST_CASE("generic graph round trip on standard spaces") {
    for (const ConnSpace& s : {brunnian(3), brunnian(5), v_space(4), v_space(6),
                               indiscrete(3), discrete(4), order_space(5)}) {
        ConnSpace back = space_from_generic_graph(generic_graph(s));
        CHECK(is_isomorphic(back, s).has_value());
    }
}

TEST_CASE("graph report separates graph and space properties") {
    GraphReport b = graph_report(brunnian(4));
    CHECK(b.graph_connected);
    CHECK(b.graph_component_count == 1);
    CHECK(b.source_count == 1);
    CHECK(!b.has_convergent_pair);
    CHECK(b.is_directed_tree);
    CHECK(b.space_connected);
    CHECK(b.space_component_count == 1);
    CHECK(b.space_irreducible);
    CHECK(b.space_distinguished);

    GraphReport d = graph_report(discrete(3));
    CHECK(!d.graph_connected);
    CHECK(d.graph_component_count == 3);
    CHECK(d.source_count == 3);
    CHECK(!d.space_connected);
    CHECK(d.space_component_count == 3);

    // Two overlapping pairs: the whole carrier is reducible, so the graph
    // gains a convergent vertex pattern and the space is not distinguished.
    ConnSpace s = generate(GroundSet::of(3), SubsetFamily::of({0b011, 0b110}), true);
    GraphReport r = graph_report(s);
    CHECK(r.graph_connected);
    CHECK(r.space_connected);
    CHECK(!r.space_irreducible);
    CHECK(!r.space_distinguished);
    CHECK(r.has_convergent_pair);
    CHECK(!r.is_directed_tree);
}

TEST_CASE("graph and space sides agree where the theory says they must") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 4;
        ConnSpace s = random_integral(rng, n, 3);
        GraphReport r = graph_report(s);
        CHECK(r.graph_connected == r.space_connected);
        CHECK(r.graph_component_count == r.space_component_count);
        CHECK((r.source_count == 1) == r.space_irreducible);
        CHECK(!r.has_convergent_pair == r.space_distinguished);
        CHECK(r.is_directed_tree == (r.space_connected && r.space_distinguished));
    }
}

TEST_CASE("irreducibles are contained in every generating family") {
    // Exhaustive on 3 points: every integral structure, every sub-family of
    // its nontrivial members.
    std::vector<Subset> nontrivial{Subset{0b011}, Subset{0b101}, Subset{0b110}, Subset{0b111}};
    GroundSet ground = GroundSet::of(3);
    std::vector<Subset> trivial{Subset::empty(), Subset{0b001}, Subset{0b010}, Subset{0b100}};

    for (std::uint32_t pick = 0; pick < (1u << 4); ++pick) {
        std::vector<Subset> members = trivial;
        for (std::size_t bit = 0; bit < 4; ++bit)
            if (pick & (1u << bit)) members.push_back(nontrivial[bit]);
        auto result = validate(ground, SubsetFamily(members), true);
        if (!std::holds_alternative<ConnSpace>(result)) continue;
        const ConnSpace& space = std::get<ConnSpace>(result);

        SubsetFamily irr = irreducibles(space);
        CHECK(generate(ground, irr, true) == space);

        for (std::uint32_t sub = 0; sub < (1u << 4); ++sub) {
            std::vector<Subset> seeds;
            for (std::size_t bit = 0; bit < 4; ++bit)
                if (sub & (1u << bit)) seeds.push_back(nontrivial[bit]);
            if (generate(ground, SubsetFamily(seeds), true) != space) continue;
            for (Subset k : irr.members())
                if (k.card() >= 2)
                    CHECK(SubsetFamily(seeds).contains(k));
        }
    }
}

TEST_CASE("dag isomorphism is shape-only") {
    Dag a{3, {{2, 0}, {2, 1}}};
    Dag b{3, {{0, 1}, {0, 2}}};
    CHECK(dag_isomorphic(a, b));
    CHECK(!dag_isomorphic(a, Dag{3, {{2, 0}}}));
    CHECK(!dag_isomorphic(a, Dag{4, {{2, 0}, {2, 1}}}));
    CHECK(dag_isomorphic(Dag{0, {}}, Dag{0, {}}));
}

} // TEST_SUITE
