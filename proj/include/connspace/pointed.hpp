#pragma once

#include "connspace/constructions.hpp"

namespace connspace {

// An integral space with a chosen basepoint.
struct PointedConnSpace {
    ConnSpace space;
    std::size_t base = 0;

    static PointedConnSpace of(ConnSpace space, std::size_t base);

    std::size_t size() const { return space.size(); }
};

// One-point union: the coproduct with the two basepoints identified.
PointedConnSpace wedge(const PointedConnSpace& p, const PointedConnSpace& q,
                       const Limits& limits = {});

// The wedge seen inside the pair carrier of the tensor: base row and base
// column, ({p0} x Q) u (P x {q0}).
Subset wedge_pair_carrier(const PointedConnSpace& p, const PointedConnSpace& q);

struct SmashSpace {
    PointedConnSpace space;
    PointMap collapse; // tensor pair carrier onto the smash carrier
};

// Tensor with the wedge collapsed to the basepoint.
SmashSpace smash(const PointedConnSpace& p, const PointedConnSpace& q, const Limits& limits = {});

// Morphisms sending basepoint to basepoint, in lexicographic table order.
std::vector<PointMap> pointed_hom_set(const PointedConnSpace& p, const PointedConnSpace& q,
                                      const Limits& limits = {});

struct PointedHomSpace {
    PointedConnSpace space;        // based at the constant-to-basepoint map
    std::vector<PointMap> points;
};

PointedHomSpace pointed_hom(const PointedConnSpace& p, const PointedConnSpace& q,
                            const Limits& limits = {});

// Transposition across the smash-hom correspondence: a based morphism from
// the smash of p and q into r corresponds to a based morphism from p into the
// based morphism space of q and r.
PointMap pointed_curry(const PointMap& psi, const PointedConnSpace& p, const PointedConnSpace& q,
                       const PointedConnSpace& r, const Limits& limits = {});
PointMap pointed_uncurry(const PointMap& phi, const PointedConnSpace& p,
                         const PointedConnSpace& q, const PointedConnSpace& r,
                         const Limits& limits = {});

// Isomorphism respecting basepoints.
std::optional<std::vector<std::size_t>> pointed_isomorphic(const PointedConnSpace& a,
                                                           const PointedConnSpace& b,
                                                           const Limits& limits = {});

} // namespace connspace
