#include "connspace/catalog.hpp"

#include <string>

#include "connspace/analysis.hpp"
#include "connspace/generation.hpp"

namespace connspace {

ConnSpace discrete(std::size_t n, const Limits& limits) {
    check_carrier(n, limits);
    std::vector<Subset> members{Subset::empty()};
    for (std::size_t p = 0; p < n; ++p) members.push_back(Subset::single(p));
    return ConnSpace::trusted(GroundSet::of(n), SubsetFamily(std::move(members)), true);
}

ConnSpace indiscrete(std::size_t n, const Limits& limits) {
    check_carrier(n, limits);
    std::uint64_t count = std::uint64_t{1} << n;
    if (count > limits.max_family)
        raise(Errc::family_size_limit_exceeded,
              "indiscrete structure on " + std::to_string(n) + " points exceeds the family limit");
    std::vector<Subset> members;
    members.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) members.push_back(Subset{m});
    return ConnSpace::trusted(GroundSet::of(n), SubsetFamily(std::move(members)), true);
}

ConnSpace brunnian(std::size_t n, const Limits& limits) {
    if (n < 1) raise(Errc::bad_argument, "brunnian spaces need at least one point");
    return brunnian_closure(discrete(n, limits));
}

ConnSpace v_space(std::size_t n, const Limits& limits) {
    if (n < 1) raise(Errc::bad_argument, "v spaces need at least one point");
    check_carrier(n, limits);
    std::vector<Subset> members{Subset::empty()};
    for (std::size_t p = 0; p < n; ++p) members.push_back(Subset::single(p));
    for (std::size_t k = 2; k <= n; ++k)
        members.push_back(Subset{(std::uint64_t{1} << k) - 1});
    return ConnSpace::trusted(GroundSet::of(n), SubsetFamily(std::move(members)), true);
}

ConnSpace from_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                     const Limits& limits) {
    check_carrier(n, limits);
    std::vector<Subset> adjacency(n);
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) raise(Errc::invalid_edge, "edge endpoint outside the carrier");
        if (a == b) raise(Errc::invalid_edge, "edges must join two distinct points");
        adjacency[a] = adjacency[a].with(b);
        adjacency[b] = adjacency[b].with(a);
    }

    // A subset is connected when frontier expansion inside it reaches
    // everything from its least point.
    std::vector<Subset> members;
    std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < count; ++m) {
        Subset s{m};
        if (s.is_empty()) {
            members.push_back(s);
            continue;
        }
        Subset reached = Subset::single(s.min_point());
        for (;;) {
            Subset frontier;
            reached.for_each_point([&](std::size_t p) { frontier = frontier | adjacency[p]; });
            Subset next = (reached | frontier) & s;
            if (next == reached) break;
            reached = next;
        }
        if (reached == s) members.push_back(s);
        if (members.size() > limits.max_family)
            raise(Errc::family_size_limit_exceeded, "graph structure exceeds the family limit");
    }
    return ConnSpace::trusted(GroundSet::of(n), SubsetFamily(std::move(members)), true);
}

ConnSpace order_space(std::size_t n, const Limits& limits) {
    check_carrier(n, limits);
    std::vector<Subset> members{Subset::empty()};
    for (std::size_t a = 0; a < n; ++a) {
        Subset interval;
        for (std::size_t b = a; b < n; ++b) {
            interval = interval.with(b);
            members.push_back(interval);
        }
    }
    return ConnSpace::trusted(GroundSet::of(n), SubsetFamily(std::move(members)), true);
}

ConnSpace compose_at(const ConnSpace& x, std::size_t p, const ConnSpace& y,
                     const Limits& limits) {
    if (!x.integral() || !y.integral())
        raise(Errc::not_integral, "composition is defined for integral spaces");
    if (x.size() == 0 || y.size() == 0)
        raise(Errc::bad_argument, "composition needs nonempty spaces");
    if (p >= x.size()) raise(Errc::invalid_point, "composition point outside the carrier");
    if (!is_irreducible_space(y))
        raise(Errc::not_irreducible, "the grafted space must be irreducible");

    std::size_t nx = x.size();
    std::size_t carrier = (nx - 1) + y.size();
    check_carrier(carrier, limits);

    // x's points keep their relative order with p removed; y follows.
    std::vector<std::size_t> rebase(nx, SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t q = 0; q < nx; ++q)
        if (q != p) rebase[q] = next++;
    auto shift_x = [&](Subset k) {
        Subset out;
        k.for_each_point([&](std::size_t q) {
            if (q != p) out = out.with(rebase[q]);
        });
        return out;
    };
    std::size_t y_off = nx - 1;
    auto shift_y = [&](Subset l) {
        Subset out;
        l.for_each_point([&](std::size_t q) { out = out.with(y_off + q); });
        return out;
    };
    Subset y_block = shift_y(y.carrier());

    SubsetFamily x_irr = irreducibles(x);
    SubsetFamily y_irr = irreducibles(y);
    std::vector<Subset> generators;
    for (Subset k : x_irr.members()) {
        if (k.contains(p))
            generators.push_back(shift_x(k) | y_block);
        else
            generators.push_back(shift_x(k));
    }
    for (Subset l : y_irr.members()) generators.push_back(shift_y(l));

    return generate(GroundSet::of(carrier), SubsetFamily(std::move(generators)), true, limits);
}

ConnSpace compose_all(const ConnSpace& x, const ConnSpace& y, const Limits& limits) {
    if (!x.integral() || !y.integral())
        raise(Errc::not_integral, "composition is defined for integral spaces");
    if (x.size() == 0 || y.size() == 0)
        raise(Errc::bad_argument, "composition needs nonempty spaces");
    if (!is_irreducible_space(y))
        raise(Errc::not_irreducible, "the grafted space must be irreducible");

    std::size_t ny = y.size();
    std::size_t carrier = x.size() * ny;
    check_carrier(carrier, limits);

    auto row = [&](std::size_t i) {
        Subset out;
        for (std::size_t j = 0; j < ny; ++j) out = out.with(i * ny + j);
        return out;
    };

    SubsetFamily y_irr = irreducibles(y);
    std::vector<Subset> generators;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (Subset l : y_irr.members()) {
            Subset cell;
            l.for_each_point([&](std::size_t j) { cell = cell.with(i * ny + j); });
            generators.push_back(cell);
        }
    }
    SubsetFamily x_irr = irreducibles(x);
    for (Subset k : x_irr.members()) {
        Subset block;
        k.for_each_point([&](std::size_t i) { block = block | row(i); });
        generators.push_back(block);
    }

    return generate(GroundSet::of(carrier), SubsetFamily(std::move(generators)), true, limits);
}

} // namespace connspace
