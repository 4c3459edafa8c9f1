#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "connspace/errors.hpp"

namespace connspace {

// Subsets of a finite carrier are bitmasks over point indices 0..n-1.
// The hard width cap is 64 points; practical limits are far below that and
// enforced separately (see Limits).
struct Subset {
    std::uint64_t bits = 0;

    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t b) : bits(b) {}

    static constexpr Subset empty() { return Subset{0}; }
    static constexpr Subset single(std::size_t i) { return Subset{std::uint64_t{1} << i}; }

    constexpr std::size_t card() const { return static_cast<std::size_t>(std::popcount(bits)); }
    constexpr bool is_empty() const { return bits == 0; }
    constexpr bool contains(std::size_t i) const { return (bits >> i) & 1u; }
    constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
    constexpr bool intersects(Subset other) const { return (bits & other.bits) != 0; }
    constexpr std::size_t min_point() const { return static_cast<std::size_t>(std::countr_zero(bits)); }
    constexpr std::size_t max_point() const { return 63u - static_cast<std::size_t>(std::countl_zero(bits)); }

    constexpr Subset with(std::size_t i) const { return Subset{bits | (std::uint64_t{1} << i)}; }
    constexpr Subset without(std::size_t i) const { return Subset{bits & ~(std::uint64_t{1} << i)}; }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }
    friend constexpr bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(Subset a, Subset b) { return a.bits != b.bits; }

    // Iterate the points of the subset, ascending.
    template <typename Fn>
    void for_each_point(Fn&& fn) const {
        std::uint64_t rest = bits;
        while (rest != 0) {
            std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
            fn(i);
            rest &= rest - 1;
        }
    }

    std::vector<std::size_t> points() const {
        std::vector<std::size_t> out;
        out.reserve(card());
        for_each_point([&](std::size_t i) { out.push_back(i); });
        return out;
    }
};

// Fixed total order used everywhere a family is sorted or compared:
// ascending cardinality, ties broken by ascending numeric bitmask.
constexpr bool canonical_less(Subset a, Subset b) {
    std::size_t ca = a.card();
    std::size_t cb = b.card();
    if (ca != cb) return ca < cb;
    return a.bits < b.bits;
}

// Carrier of a space: n points, optionally labeled. Labels are display-only;
// all algorithms work on indices.
struct GroundSet {
    std::size_t n = 0;
    std::vector<std::string> labels; // empty, or exactly n distinct entries

    static GroundSet of(std::size_t n);
    static GroundSet of(std::size_t n, std::vector<std::string> labels);

    Subset full() const {
        return n == 0 ? Subset::empty()
                      : Subset{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    bool admits(Subset s) const { return s.subset_of(full()); }

    std::string label(std::size_t i) const;
    std::string describe(Subset s) const; // "{a b}" or "{0 1}" when unlabeled

    friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.n == b.n; }
};

// A deduplicated family of subsets, kept in canonical order.
class SubsetFamily {
public:
    SubsetFamily() = default;
    explicit SubsetFamily(std::vector<Subset> members);

    static SubsetFamily of(std::initializer_list<std::uint64_t> masks);

    const std::vector<Subset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Subset s) const;

    // Members of cardinality >= 2; the "nontrivial" part of a structure.
    SubsetFamily nontrivial() const;

    bool fits(const GroundSet& g) const;

    SubsetFamily united(const SubsetFamily& other) const;
    SubsetFamily intersected(const SubsetFamily& other) const;

    friend bool operator==(const SubsetFamily& a, const SubsetFamily& b) {
        return a.members_ == b.members_;
    }
    friend bool operator!=(const SubsetFamily& a, const SubsetFamily& b) {
        return !(a == b);
    }

    // Lexicographic comparison of the canonically ordered member sequences.
    static bool family_less(const SubsetFamily& a, const SubsetFamily& b);

private:
    std::vector<Subset> members_;
};

// Size guards. Structures can be exponential in carrier size, so operations
// that materialize families or enumerate powersets refuse to run past these
// bounds instead of blowing up silently.
struct Limits {
    std::size_t max_carrier = 20;           // carrier size for spaces and comprehensions
    std::size_t max_family = 1u << 20;      // members in any materialized structure
    std::size_t max_perm_carrier = 10;      // isomorphism / canonical-form search
    std::uint64_t max_hom = 1u << 16;       // candidate functions when enumerating morphisms
    std::uint64_t max_search = 1u << 20;    // candidate functions in homotopy search

    std::size_t carrier_cap() const { return max_carrier < 64 ? max_carrier : 64; }
};

void check_carrier(std::size_t n, const Limits& lim);

// floor-capped |base|^|exp|; saturates at cap+1 to keep guard checks overflow-safe.
std::uint64_t capped_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap);

} // namespace connspace
