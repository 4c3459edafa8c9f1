#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "connspace/subset.hpp"

namespace connspace {

// Why a structure failed validation, with the offending witness.
struct Diagnostic {
    Errc code = Errc::missing_empty_set;
    Subset witness_a;       // not_union_closed: the overlapping pair
    Subset witness_b;
    std::size_t point = 0;  // missing_singleton: the uncovered point

    std::string describe(const GroundSet& ground) const;
};

// A finite connectivity space: a carrier and a family of connected subsets
// containing the empty set and closed under unions of overlapping members.
// When the integral flag is set, every singleton is a member.
class ConnSpace {
public:
    const GroundSet& ground() const { return ground_; }
    const SubsetFamily& structure() const { return structure_; }
    bool integral() const { return integral_; }

    std::size_t size() const { return ground_.n; }
    Subset carrier() const { return ground_.full(); }
    bool is_connected(Subset s) const { return structure_.contains(s); }

    // For outputs whose closure is guaranteed by construction. No checks run;
    // every operation using this is covered by validation tests at small sizes.
    static ConnSpace trusted(GroundSet ground, SubsetFamily structure, bool integral);

    ConnSpace relabeled(std::vector<std::string> labels) const;
    ConnSpace unlabeled() const;

    friend bool operator==(const ConnSpace& a, const ConnSpace& b) {
        return a.ground_.n == b.ground_.n && a.integral_ == b.integral_ &&
               a.structure_ == b.structure_;
    }

private:
    ConnSpace(GroundSet ground, SubsetFamily structure, bool integral)
        : ground_(std::move(ground)), structure_(std::move(structure)), integral_(integral) {}

    GroundSet ground_;
    SubsetFamily structure_;
    bool integral_ = true;
};

using ValidationResult = std::variant<ConnSpace, Diagnostic>;

// Checks the three structure axioms in order (empty set present, union
// closure over overlapping pairs, singletons present when integral) and
// reports the first violation. Pairwise closure suffices on finite carriers:
// unions of larger overlapping sub-families are reachable two sets at a time.
ValidationResult validate(GroundSet ground, SubsetFamily family, bool integral,
                          const Limits& limits = {});

// Throwing wrapper around validate.
ConnSpace make_space(GroundSet ground, SubsetFamily family, bool integral,
                     const Limits& limits = {});

bool is_connected_subset(const ConnSpace& space, Subset s);

// Maximal connected subsets; pairwise disjoint and covering the carrier.
// Requires an integral space.
std::vector<Subset> connected_components(const ConnSpace& space);

// Point bijection g with g(structure(a)) = structure(b), if one exists.
// Backtracking over point assignments, pruned by per-point degree profiles
// (counts of members of each cardinality through the point).
std::optional<std::vector<std::size_t>> is_isomorphic(const ConnSpace& a, const ConnSpace& b,
                                                      const Limits& limits = {});

// Same search with forced assignments (pairs of point indices a -> b).
std::optional<std::vector<std::size_t>> is_isomorphic_pinned(
    const ConnSpace& a, const ConnSpace& b,
    std::span<const std::pair<std::size_t, std::size_t>> pins, const Limits& limits = {});

// Lexicographically least relabeling of the structure under the canonical
// family order. Two spaces have equal canonical forms iff they are isomorphic.
ConnSpace canonical_form(const ConnSpace& space, const Limits& limits = {});

SubsetFamily apply_permutation(const SubsetFamily& family,
                               const std::vector<std::size_t>& perm);
Subset apply_map(Subset s, const std::vector<std::size_t>& table);

} // namespace connspace
