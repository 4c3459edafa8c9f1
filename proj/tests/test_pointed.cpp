#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>

#include "connspace/catalog.hpp"
#include "connspace/generation.hpp"
#include "connspace/pointed.hpp"

using namespace connspace;

namespace {

PointedConnSpace random_pointed(std::mt19937& rng, std::size_t n, int gens) {
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<Subset> g;
    for (int k = 0; k < gens; ++k) g.push_back(Subset{rng() & full});
    ConnSpace s = generate(GroundSet::of(n), SubsetFamily(g), true);
    return PointedConnSpace::of(std::move(s), rng() % n);
}

Errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::bad_argument;
}

} // namespace

TEST_SUITE("pointed") {

TEST_CASE("pointed spaces require an integral carrier holding the base") {
    PointedConnSpace p = PointedConnSpace::of(brunnian(3), 2);
    CHECK(p.size() == 3);
    CHECK(p.base == 2);

    ConnSpace plain = make_space(GroundSet::of(2), SubsetFamily::of({0}), false);
    CHECK(thrown_code([&] { PointedConnSpace::of(plain, 0); }) == Errc::not_integral);
    CHECK(thrown_code([] { PointedConnSpace::of(discrete(0), 0); }) == Errc::bad_argument);
    CHECK(thrown_code([] { PointedConnSpace::of(discrete(2), 2); }) == Errc::invalid_point);
}

TEST_CASE("wedges glue the two basepoints into one carrier") {
    PointedConnSpace b0 = PointedConnSpace::of(brunnian(2), 0);
    PointedConnSpace w = wedge(b0, b0);
    CHECK(w.size() == 3);
    CHECK(w.base == 0);
    CHECK(w.space.structure() ==
          SubsetFamily::of({0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b111}));

    PointedConnSpace b1 = PointedConnSpace::of(brunnian(2), 1);
    PointedConnSpace w1 = wedge(b1, b1);
    CHECK(w1.size() == 3);
    CHECK(w1.base == 1);
    CHECK(w1.space.structure() ==
          SubsetFamily::of({0, 0b001, 0b010, 0b100, 0b011, 0b110, 0b111}));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        PointedConnSpace p = random_pointed(rng, 2 + rng() % 3, 2);
        PointedConnSpace q = random_pointed(rng, 2 + rng() % 3, 2);
        CHECK(wedge(p, q).size() == p.size() + q.size() - 1);
    }
}

TEST_CASE("the wedge embeds in the tensor as base row plus base column") {
    PointedConnSpace b0 = PointedConnSpace::of(brunnian(2), 0);
    CHECK(wedge_pair_carrier(b0, b0) == Subset{0b0111});

    std::mt19937 rng(29);
    for (int trial = 0; trial < 8; ++trial) {
        PointedConnSpace p = random_pointed(rng, 2 + rng() % 2, 2);
        PointedConnSpace q = random_pointed(rng, 2 + rng() % 3, 2);
        Subset kept = wedge_pair_carrier(p, q);
        CHECK(kept.card() == p.size() + q.size() - 1);

        ConnSpace inside = subspace(tensor(p.space, q.space), kept);
        std::size_t base_pair = pair_point(p.base, q.base, q.size());
        std::size_t rank = 0;
        kept.for_each_point([&](std::size_t pt) { rank += pt < base_pair ? 1 : 0; });
        auto iso = pointed_isomorphic(wedge(p, q), PointedConnSpace::of(inside, rank));
        CHECK(iso.has_value());
    }
}

TEST_CASE("smashing collapses the wedge to the basepoint") {
    PointedConnSpace b0 = PointedConnSpace::of(brunnian(2), 0);
    SmashSpace sm = smash(b0, b0);
    CHECK(sm.space.size() == 2);
    CHECK(sm.space.base == 0);
    CHECK(sm.space.space == indiscrete(2));
    CHECK(sm.collapse == PointMap::of(4, 2, {0, 0, 0, 1}));

    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        PointedConnSpace p = random_pointed(rng, 2 + rng() % 3, 2);
        PointedConnSpace q = random_pointed(rng, 2 + rng() % 3, 2);
        SmashSpace s = smash(p, q);
        std::size_t np = p.size();
        std::size_t nq = q.size();
        CHECK(s.space.size() == np * nq - np - nq + 2);
        CHECK(is_morphism(s.collapse, tensor(p.space, q.space), s.space.space));
        CHECK(s.collapse(pair_point(p.base, q.base, nq)) == s.space.base);
    }
}

TEST_CASE("based morphism sets filter the hom set by the basepoint") {
    PointedConnSpace b0 = PointedConnSpace::of(brunnian(2), 0);
    auto based = pointed_hom_set(b0, b0);
    REQUIRE(based.size() == 2);
    CHECK(based[0].table == std::vector<std::size_t>{0, 0});
    CHECK(based[1].table == std::vector<std::size_t>{0, 1});

    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        PointedConnSpace p = random_pointed(rng, 1 + rng() % 3, 2);
        PointedConnSpace q = random_pointed(rng, 1 + rng() % 3, 2);
        std::vector<PointMap> filtered;
        for (const PointMap& f : hom_set(p.space, q.space))
            if (f(p.base) == q.base) filtered.push_back(f);
        CHECK(pointed_hom_set(p, q) == filtered);
    }
}

TEST_CASE("based morphism spaces sit at the constant-to-base map") {
    PointedConnSpace p = PointedConnSpace::of(brunnian(2), 0);
    PointedConnSpace q = PointedConnSpace::of(v_space(3), 0);
    PointedHomSpace h = pointed_hom(p, q);
    CHECK(h.points == pointed_hom_set(p, q));
    CHECK(h.points[h.space.base] == PointMap::constant(2, 3, 0));
    CHECK(h.space.space.integral());
    auto ok = validate(h.space.space.ground(), h.space.space.structure(), true);
    CHECK(std::holds_alternative<ConnSpace>(ok));

    // Membership matches the singleton evaluation criterion.
    std::uint64_t count = std::uint64_t{1} << h.points.size();
    for (std::uint64_t m = 0; m < count; ++m)
        CHECK(h.space.space.is_connected(Subset{m}) ==
              hom_subset_connected(q.space, h.points, Subset{m}));
}

TEST_CASE("pointed curry and uncurry transpose across the smash") {
    std::vector<std::array<PointedConnSpace, 3>> configs;
    configs.push_back({PointedConnSpace::of(brunnian(2), 0), PointedConnSpace::of(brunnian(2), 0),
                       PointedConnSpace::of(v_space(3), 0)});
    configs.push_back({PointedConnSpace::of(v_space(3), 0), PointedConnSpace::of(brunnian(2), 0),
                       PointedConnSpace::of(v_space(3), 1)});
    configs.push_back({PointedConnSpace::of(brunnian(2), 0), PointedConnSpace::of(discrete(2), 0),
                       PointedConnSpace::of(v_space(3), 1)});
    configs.push_back({PointedConnSpace::of(brunnian(2), 1), PointedConnSpace::of(brunnian(2), 0),
                       PointedConnSpace::of(brunnian(3), 2)});

    for (const auto& [p, q, r] : configs) {
        SmashSpace sm = smash(p, q);
        PointedHomSpace phom = pointed_hom(q, r);

        std::vector<PointMap> curried;
        for (const PointMap& psi : pointed_hom_set(sm.space, r)) {
            PointMap phi = pointed_curry(psi, p, q, r);
            CHECK(phi(p.base) == phom.space.base);
            CHECK(is_morphism(phi, p.space, phom.space.space));
            CHECK(pointed_uncurry(phi, p, q, r) == psi);
            curried.push_back(phi);
        }
        std::sort(curried.begin(), curried.end(),
                  [](const PointMap& a, const PointMap& b) { return a.table < b.table; });
        CHECK(curried == pointed_hom_set(p, phom.space));
        for (const PointMap& phi : pointed_hom_set(p, phom.space))
            CHECK(pointed_curry(pointed_uncurry(phi, p, q, r), p, q, r) == phi);
    }
}

TEST_CASE("pointed transposition rejects maps breaking the correspondence") {
    PointedConnSpace p = PointedConnSpace::of(brunnian(2), 0);
    PointedConnSpace q = PointedConnSpace::of(discrete(2), 0);
    PointedConnSpace r = PointedConnSpace::of(v_space(3), 1);

    // Moving the middle to the tip is not a move the morphism space allows.
    CHECK(thrown_code([&] {
              pointed_uncurry(PointMap::of(2, 3, {1, 2}), p, q, r);
          }) == Errc::not_morphism);
    CHECK(thrown_code([&] {
              pointed_uncurry(PointMap::of(2, 3, {0, 0}), p, q, r);
          }) == Errc::not_morphism);
    CHECK(thrown_code([&] {
              pointed_uncurry(PointMap::of(3, 3, {1, 1, 1}), p, q, r);
          }) == Errc::ground_mismatch);

    SmashSpace sm = smash(p, q);
    CHECK(thrown_code([&] {
              pointed_curry(PointMap::identity(sm.space.size()), p, q, r);
          }) == Errc::ground_mismatch);
    // A based map from the smash that fails on a connected set.
    PointMap bad = PointMap::of(sm.space.size(), 3,
                                [&] {
                                    std::vector<std::size_t> t(sm.space.size(), 2);
                                    t[sm.space.base] = 1;
                                    return t;
                                }());
    CHECK(thrown_code([&] { pointed_curry(bad, p, q, r); }) == Errc::not_morphism);
}

TEST_CASE("pointed isomorphism pins the basepoints") {
    CHECK(pointed_isomorphic(PointedConnSpace::of(brunnian(3), 0),
                             PointedConnSpace::of(brunnian(3), 1))
              .has_value());

    auto same = pointed_isomorphic(PointedConnSpace::of(v_space(3), 0),
                                   PointedConnSpace::of(v_space(3), 1));
    REQUIRE(same.has_value());
    CHECK(apply_permutation(v_space(3).structure(), *same) == v_space(3).structure());
    CHECK((*same)[0] == 1);

    CHECK(!pointed_isomorphic(PointedConnSpace::of(v_space(3), 0),
                              PointedConnSpace::of(v_space(3), 2))
               .has_value());
}

} // TEST_SUITE
