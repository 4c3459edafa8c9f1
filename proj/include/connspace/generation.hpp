#pragma once

#include "connspace/space.hpp"

namespace connspace {

// One expansion round: the empty set, the input family, and every union of an
// overlapping sub-family (equivalently, every union reachable through a
// common point). Applying this to a fixed point leaves it unchanged.
SubsetFamily expansion_step(const GroundSet& ground, const SubsetFamily& family,
                            const Limits& limits = {});

// Least connectivity structure containing the generators; singletons are
// seeded first when integral is set. Worklist closure over overlapping pairs,
// bounded by the family guard.
ConnSpace generate(const GroundSet& ground, const SubsetFamily& generators, bool integral,
                   const Limits& limits = {});

// Largest structure contained in both (plain intersection).
ConnSpace structure_meet(const ConnSpace& a, const ConnSpace& b);

// Least structure containing both.
ConnSpace structure_join(const ConnSpace& a, const ConnSpace& b, const Limits& limits = {});

} // namespace connspace
