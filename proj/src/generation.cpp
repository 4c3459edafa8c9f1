#include "connspace/generation.hpp"

#include <unordered_set>

namespace connspace {

namespace {

// Closure of a family under unions of overlapping pairs, as a worklist:
// every popped member is paired against everything accepted before it, and
// new unions join the queue. Each subset enters at most once, so the loop
// performs at most 2^n insertions.
std::vector<Subset> close_under_overlapping_unions(std::vector<Subset> seed,
                                                   std::size_t carrier_size,
                                                   const Limits& limits) {
    std::vector<Subset> members;
    std::unordered_set<std::uint64_t> seen;
    for (Subset s : seed) {
        if (seen.insert(s.bits).second) members.push_back(s);
    }
    const std::uint64_t budget =
        capped_pow(2, carrier_size, limits.max_family) > limits.max_family
            ? limits.max_family
            : (std::uint64_t{1} << carrier_size);

    std::size_t next = 0;
    while (next < members.size()) {
        Subset a = members[next++];
        if (a.is_empty()) continue;
        // members grows during the scan; pairing against the prefix is enough
        // because later entries will pair with `a` when their turn comes.
        for (std::size_t i = 0; i + 1 < next; ++i) {
            Subset b = members[i];
            if (!a.intersects(b)) continue;
            Subset u = a | b;
            if (seen.insert(u.bits).second) {
                members.push_back(u);
                if (members.size() > limits.max_family)
                    raise(Errc::family_size_limit_exceeded,
                          "generated family exceeds " + std::to_string(limits.max_family) +
                              " members");
                if (members.size() > budget)
                    raise(Errc::family_size_limit_exceeded,
                          "generation exceeded the 2^n member bound");
            }
        }
    }
    return members;
}

} // namespace

SubsetFamily expansion_step(const GroundSet& ground, const SubsetFamily& family,
                            const Limits& limits) {
    check_carrier(ground.n, limits);
    if (!family.fits(ground))
        raise(Errc::bad_argument, "family member lies outside the carrier");

    std::vector<Subset> out = family.members();
    out.push_back(Subset::empty());
    // Unions of sub-families with a common point x are exactly the iterated
    // pairwise unions among the members containing x.
    for (std::size_t x = 0; x < ground.n; ++x) {
        std::vector<Subset> star;
        for (Subset s : family.members())
            if (s.contains(x)) star.push_back(s);
        auto closed = close_under_overlapping_unions(std::move(star), ground.n, limits);
        out.insert(out.end(), closed.begin(), closed.end());
    }
    return SubsetFamily(std::move(out));
}

ConnSpace generate(const GroundSet& ground, const SubsetFamily& generators, bool integral,
                   const Limits& limits) {
    check_carrier(ground.n, limits);
    if (!generators.fits(ground))
        raise(Errc::bad_argument, "generator lies outside the carrier");

    std::vector<Subset> seed;
    seed.push_back(Subset::empty());
    if (integral)
        for (std::size_t p = 0; p < ground.n; ++p) seed.push_back(Subset::single(p));
    const auto& gens = generators.members();
    seed.insert(seed.end(), gens.begin(), gens.end());

    auto members = close_under_overlapping_unions(std::move(seed), ground.n, limits);
    return ConnSpace::trusted(ground, SubsetFamily(std::move(members)), integral);
}

ConnSpace structure_meet(const ConnSpace& a, const ConnSpace& b) {
    if (a.size() != b.size())
        raise(Errc::ground_mismatch, "meet requires a common carrier");
    if (a.integral() != b.integral())
        raise(Errc::ground_mismatch, "meet requires matching integral flags");
    return ConnSpace::trusted(GroundSet::of(a.size()),
                              a.structure().intersected(b.structure()), a.integral());
}

ConnSpace structure_join(const ConnSpace& a, const ConnSpace& b, const Limits& limits) {
    if (a.size() != b.size())
        raise(Errc::ground_mismatch, "join requires a common carrier");
    if (a.integral() != b.integral())
        raise(Errc::ground_mismatch, "join requires matching integral flags");
    return generate(GroundSet::of(a.size()), a.structure().united(b.structure()), a.integral(),
                    limits);
}

} // namespace connspace
