#include "connspace/pointed.hpp"

#include <map>

namespace connspace {

PointedConnSpace PointedConnSpace::of(ConnSpace space, std::size_t base) {
    if (!space.integral()) raise(Errc::not_integral, "pointed spaces must be integral");
    if (space.size() == 0) raise(Errc::bad_argument, "pointed spaces must be nonempty");
    if (base >= space.size()) raise(Errc::invalid_point, "basepoint outside the carrier");
    return PointedConnSpace{std::move(space), base};
}

PointedConnSpace wedge(const PointedConnSpace& p, const PointedConnSpace& q,
                       const Limits& limits) {
    ConnSpace co = coproduct(p.space, q.space, limits);
    Partition part = Partition::merging(co.size(), {{p.base, p.size() + q.base}});
    ConnSpace glued = quotient(co, part, limits);
    return PointedConnSpace{std::move(glued), part.class_of(p.base)};
}

Subset wedge_pair_carrier(const PointedConnSpace& p, const PointedConnSpace& q) {
    Subset w;
    for (std::size_t j = 0; j < q.size(); ++j) w = w.with(pair_point(p.base, j, q.size()));
    for (std::size_t i = 0; i < p.size(); ++i) w = w.with(pair_point(i, q.base, q.size()));
    return w;
}

SmashSpace smash(const PointedConnSpace& p, const PointedConnSpace& q, const Limits& limits) {
    ConnSpace t = tensor(p.space, q.space, limits);
    Subset w = wedge_pair_carrier(p, q);
    Partition part = Partition::merging(t.size(), {w.points()});
    ConnSpace collapsed = quotient(t, part, limits);
    std::size_t base = part.class_of(pair_point(p.base, q.base, q.size()));
    return SmashSpace{PointedConnSpace{std::move(collapsed), base}, part.class_map()};
}

std::vector<PointMap> pointed_hom_set(const PointedConnSpace& p, const PointedConnSpace& q,
                                      const Limits& limits) {
    std::vector<PointMap> out;
    for_each_morphism(p.space, q.space, limits, [&](const PointMap& f) {
        if (f(p.base) == q.base) out.push_back(f);
    });
    return out;
}

PointedHomSpace pointed_hom(const PointedConnSpace& p, const PointedConnSpace& q,
                            const Limits& limits) {
    std::vector<PointMap> points = pointed_hom_set(p, q, limits);
    check_carrier(points.size(), limits);
    if (points.size() >= 64)
        raise(Errc::size_limit_exceeded, "powerset enumeration needs fewer than 64 points");

    std::vector<Subset> members;
    std::uint64_t count = std::uint64_t{1} << points.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (hom_subset_connected(q.space, points, Subset{mask})) {
            members.push_back(Subset{mask});
            if (members.size() > limits.max_family)
                raise(Errc::family_size_limit_exceeded, "morphism space exceeds the family limit");
        }
    }
    ConnSpace space = ConnSpace::trusted(GroundSet::of(points.size()),
                                         SubsetFamily(std::move(members)), true);

    PointMap to_base = PointMap::constant(p.size(), q.size(), q.base);
    std::size_t base = SIZE_MAX;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == to_base) base = i;
    // The constant-to-basepoint map is always a based morphism.
    if (base == SIZE_MAX) raise(Errc::not_morphism, "constant basepoint map missing");
    return PointedHomSpace{PointedConnSpace{std::move(space), base}, std::move(points)};
}

PointMap pointed_curry(const PointMap& psi, const PointedConnSpace& p, const PointedConnSpace& q,
                       const PointedConnSpace& r, const Limits& limits) {
    SmashSpace sm = smash(p, q, limits);
    if (psi.source_size != sm.space.size() || psi.target_size != r.size())
        raise(Errc::ground_mismatch, "map endpoints do not match the smash and target");
    if (!is_morphism(psi, sm.space.space, r.space) || psi(sm.space.base) != r.base)
        raise(Errc::not_morphism, "curry input is not a based morphism from the smash");

    PointedHomSpace phom = pointed_hom(q, r, limits);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < phom.points.size(); ++i) index[phom.points[i].table] = i;

    std::vector<std::size_t> table(p.size());
    for (std::size_t pp = 0; pp < p.size(); ++pp) {
        std::vector<std::size_t> partial(q.size());
        for (std::size_t qq = 0; qq < q.size(); ++qq)
            partial[qq] = psi(sm.collapse(pair_point(pp, qq, q.size())));
        auto it = index.find(partial);
        if (it == index.end())
            raise(Errc::not_morphism, "partial map is not a based morphism"); // unreachable
        table[pp] = it->second;
    }
    return PointMap{p.size(), phom.points.size(), std::move(table)};
}

PointMap pointed_uncurry(const PointMap& phi, const PointedConnSpace& p,
                         const PointedConnSpace& q, const PointedConnSpace& r,
                         const Limits& limits) {
    PointedHomSpace phom = pointed_hom(q, r, limits);
    if (phi.source_size != p.size() || phi.target_size != phom.points.size())
        raise(Errc::ground_mismatch, "map endpoints do not match the morphism space");
    if (phi(p.base) != phom.space.base)
        raise(Errc::not_morphism, "uncurry input does not respect basepoints");
    for (Subset k : p.space.structure().members()) {
        if (k.is_empty()) continue;
        if (!hom_subset_connected(r.space, phom.points, phi.image(k)))
            raise(Errc::not_morphism, "uncurry input is not a morphism into the morphism space");
    }

    SmashSpace sm = smash(p, q, limits);
    std::vector<std::size_t> table(sm.space.size());
    for (std::size_t pp = 0; pp < p.size(); ++pp)
        for (std::size_t qq = 0; qq < q.size(); ++qq)
            table[sm.collapse(pair_point(pp, qq, q.size()))] = phom.points[phi(pp)](qq);
    return PointMap{sm.space.size(), r.size(), std::move(table)};
}

std::optional<std::vector<std::size_t>> pointed_isomorphic(const PointedConnSpace& a,
                                                           const PointedConnSpace& b,
                                                           const Limits& limits) {
    std::pair<std::size_t, std::size_t> pin{a.base, b.base};
    return is_isomorphic_pinned(a.space, b.space, {&pin, 1}, limits);
}

} // namespace connspace
