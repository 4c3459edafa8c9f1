#include "connspace/space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace connspace {

std::string Diagnostic::describe(const GroundSet& ground) const {
    std::ostringstream out;
    switch (code) {
        case Errc::missing_empty_set:
            out << "the empty set is not a member";
            break;
        case Errc::not_union_closed:
            out << "not union-closed: " << ground.describe(witness_a) << " and "
                << ground.describe(witness_b) << " overlap but "
                << ground.describe(witness_a | witness_b) << " is not a member";
            break;
        case Errc::missing_singleton:
            out << "integral structure is missing the singleton {" << ground.label(point) << "}";
            break;
        default:
            out << errc_name(code);
            break;
    }
    return out.str();
}

ConnSpace ConnSpace::trusted(GroundSet ground, SubsetFamily structure, bool integral) {
    return ConnSpace(std::move(ground), std::move(structure), integral);
}

ConnSpace ConnSpace::relabeled(std::vector<std::string> labels) const {
    return ConnSpace(GroundSet::of(ground_.n, std::move(labels)), structure_, integral_);
}

ConnSpace ConnSpace::unlabeled() const {
    return ConnSpace(GroundSet::of(ground_.n), structure_, integral_);
}

ValidationResult validate(GroundSet ground, SubsetFamily family, bool integral,
                          const Limits& limits) {
    check_carrier(ground.n, limits);
    if (family.size() > limits.max_family)
        raise(Errc::family_size_limit_exceeded,
              "family has " + std::to_string(family.size()) + " members, limit is " +
                  std::to_string(limits.max_family));
    if (!family.fits(ground))
        raise(Errc::bad_argument, "family member lies outside the carrier");

    if (!family.contains(Subset::empty()))
        return Diagnostic{Errc::missing_empty_set, {}, {}, 0};

    // Pairwise closure over overlapping members; first offending pair in
    // canonical scan order is the witness.
    const auto& members = family.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!members[i].intersects(members[j])) continue;
            Subset u = members[i] | members[j];
            if (!family.contains(u))
                return Diagnostic{Errc::not_union_closed, members[i], members[j], 0};
        }
    }

    if (integral) {
        for (std::size_t p = 0; p < ground.n; ++p) {
            if (!family.contains(Subset::single(p)))
                return Diagnostic{Errc::missing_singleton, {}, {}, p};
        }
    }

    return ConnSpace::trusted(std::move(ground), std::move(family), integral);
}

ConnSpace make_space(GroundSet ground, SubsetFamily family, bool integral,
                     const Limits& limits) {
    auto result = validate(ground, family, integral, limits);
    if (auto* diag = std::get_if<Diagnostic>(&result))
        raise(diag->code, diag->describe(ground));
    return std::get<ConnSpace>(std::move(result));
}

bool is_connected_subset(const ConnSpace& space, Subset s) {
    if (!space.ground().admits(s))
        raise(Errc::bad_argument, "subset lies outside the carrier");
    return space.is_connected(s);
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<Subset> connected_components(const ConnSpace& space) {
    if (!space.integral())
        raise(Errc::not_integral, "components are defined for integral spaces");
    UnionFind uf(space.size());
    for (Subset k : space.structure().members()) {
        if (k.card() < 2) continue;
        std::size_t first = k.min_point();
        k.for_each_point([&](std::size_t p) { uf.unite(first, p); });
    }
    std::vector<Subset> blocks(space.size());
    for (std::size_t p = 0; p < space.size(); ++p) {
        std::size_t root = uf.find(p);
        blocks[root] = blocks[root].with(p);
    }
    std::vector<Subset> out;
    for (Subset b : blocks)
        if (!b.is_empty()) out.push_back(b);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Subset apply_map(Subset s, const std::vector<std::size_t>& table) {
    Subset out;
    s.for_each_point([&](std::size_t p) { out = out.with(table[p]); });
    return out;
}

SubsetFamily apply_permutation(const SubsetFamily& family, const std::vector<std::size_t>& perm) {
    std::vector<Subset> out;
    out.reserve(family.size());
    for (Subset s : family.members()) out.push_back(apply_map(s, perm));
    return SubsetFamily(std::move(out));
}

namespace {

// Degree profile of a point: member counts by cardinality. Isomorphisms
// preserve profiles, which prunes the assignment search hard.
std::vector<std::size_t> point_profile(const ConnSpace& space, std::size_t p) {
    std::vector<std::size_t> prof(space.size() + 1, 0);
    for (Subset k : space.structure().members())
        if (k.contains(p)) ++prof[k.card()];
    return prof;
}

struct IsoSearch {
    const ConnSpace& a;
    const ConnSpace& b;
    std::size_t n;
    std::vector<std::vector<Subset>> by_max; // members of a, bucketed by max point
    std::vector<std::vector<bool>> compatible;
    std::vector<std::size_t> assignment;
    std::vector<bool> used;

    IsoSearch(const ConnSpace& a_, const ConnSpace& b_) : a(a_), b(b_), n(a_.size()) {
        by_max.resize(n);
        for (Subset k : a.structure().members())
            if (!k.is_empty()) by_max[k.max_point()].push_back(k);
        std::vector<std::vector<std::size_t>> pa(n), pb(n);
        for (std::size_t p = 0; p < n; ++p) {
            pa[p] = point_profile(a, p);
            pb[p] = point_profile(b, p);
        }
        compatible.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) compatible[i][j] = (pa[i] == pb[j]);
        assignment.assign(n, 0);
        used.assign(n, false);
    }

    bool extend(std::size_t depth, const std::vector<std::optional<std::size_t>>& pins) {
        if (depth == n) return true;
        for (std::size_t img = 0; img < n; ++img) {
            if (used[img] || !compatible[depth][img]) continue;
            if (pins[depth] && *pins[depth] != img) continue;
            assignment[depth] = img;
            used[img] = true;
            bool ok = true;
            for (Subset k : by_max[depth]) {
                if (!b.structure().contains(apply_map(k, assignment))) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(depth + 1, pins)) return true;
            used[img] = false;
        }
        return false;
    }
};

std::optional<std::vector<std::size_t>> iso_impl(
    const ConnSpace& a, const ConnSpace& b,
    std::span<const std::pair<std::size_t, std::size_t>> pins, const Limits& limits) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.structure().size() != b.structure().size()) return std::nullopt;
    if (a.size() > limits.max_perm_carrier)
        raise(Errc::size_limit_exceeded,
              "isomorphism search limited to carriers of size " +
                  std::to_string(limits.max_perm_carrier));

    std::vector<std::optional<std::size_t>> pin_table(a.size());
    for (auto [pa, pb] : pins) {
        if (pa >= a.size() || pb >= b.size())
            raise(Errc::invalid_point, "pinned point outside the carrier");
        pin_table[pa] = pb;
    }

    IsoSearch search(a, b);
    if (search.extend(0, pin_table)) return search.assignment;
    return std::nullopt;
}

} // namespace

std::optional<std::vector<std::size_t>> is_isomorphic(const ConnSpace& a, const ConnSpace& b,
                                                      const Limits& limits) {
    return iso_impl(a, b, {}, limits);
}

std::optional<std::vector<std::size_t>> is_isomorphic_pinned(
    const ConnSpace& a, const ConnSpace& b,
    std::span<const std::pair<std::size_t, std::size_t>> pins, const Limits& limits) {
    return iso_impl(a, b, pins, limits);
}

ConnSpace canonical_form(const ConnSpace& space, const Limits& limits) {
    std::size_t n = space.size();
    if (n > limits.max_perm_carrier)
        raise(Errc::size_limit_exceeded,
              "canonical form limited to carriers of size " +
                  std::to_string(limits.max_perm_carrier));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    SubsetFamily best = space.structure();
    do {
        SubsetFamily candidate = apply_permutation(space.structure(), perm);
        if (SubsetFamily::family_less(candidate, best)) best = std::move(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ConnSpace::trusted(GroundSet::of(n), std::move(best), space.integral());
}

} // namespace connspace
