#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "connspace/space.hpp"

namespace connspace {

// A function between carriers, as an index table.
struct PointMap {
    std::size_t source_size = 0;
    std::size_t target_size = 0;
    std::vector<std::size_t> table;

    static PointMap of(std::size_t source_size, std::size_t target_size,
                       std::vector<std::size_t> table);
    static PointMap identity(std::size_t n);
    static PointMap constant(std::size_t source_size, std::size_t target_size,
                             std::size_t value);

    std::size_t operator()(std::size_t p) const { return table[p]; }
    Subset image(Subset s) const;
    PointMap then(const PointMap& next) const; // this first, next second

    friend bool operator==(const PointMap& a, const PointMap& b) {
        return a.source_size == b.source_size && a.target_size == b.target_size &&
               a.table == b.table;
    }
};

// Blocks covering a carrier, pairwise disjoint and nonempty.
struct Partition {
    std::size_t ground_size = 0;
    std::vector<Subset> blocks;

    static Partition of(std::size_t ground_size, std::vector<Subset> blocks);
    // Classes of the equivalence generated by the merge groups; blocks are
    // ordered by their least element.
    static Partition merging(std::size_t ground_size,
                             const std::vector<std::vector<std::size_t>>& groups);

    std::size_t class_of(std::size_t p) const;
    PointMap class_map() const;
};

struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    PointMap map;
};

// A finite diagram of spaces; every arrow is checked to be a morphism and all
// objects share the integral flag.
struct Diagram {
    std::vector<ConnSpace> objects;
    std::vector<Arrow> arrows;

    static Diagram of(std::vector<ConnSpace> objects, std::vector<Arrow> arrows);
};

struct Cocone {
    ConnSpace space;
    std::vector<PointMap> coprojections;
};

struct Cone {
    ConnSpace space;
    std::vector<PointMap> projections;
};

// Morphisms carry connected sets to connected sets.
bool is_morphism(const PointMap& f, const ConnSpace& x, const ConnSpace& y);

// Least structure on the target making f a morphism.
ConnSpace pushforward(const PointMap& f, const ConnSpace& x, const Limits& limits = {});

// Largest structure on the source making f a morphism into y; enumerated by
// comprehension over the source powerset.
ConnSpace pullback(const PointMap& f, std::size_t source_size, const ConnSpace& y,
                   const Limits& limits = {});

// Pairs (i, j) encoded row-major as i * |second| + j.
std::size_t pair_point(std::size_t i, std::size_t j, std::size_t second_size);
std::pair<std::size_t, std::size_t> pair_split(std::size_t p, std::size_t second_size);

// Categorical product: a subset of the pair carrier is connected exactly when
// both projections are.
ConnSpace product(const ConnSpace& a, const ConnSpace& b, const Limits& limits = {});
PointMap product_projection(const ConnSpace& a, const ConnSpace& b, std::size_t which);

// Disjoint union; b's points are shifted past a's.
ConnSpace coproduct(const ConnSpace& a, const ConnSpace& b, const Limits& limits = {});

ConnSpace quotient(const ConnSpace& space, const Partition& partition, const Limits& limits = {});
ConnSpace subspace(const ConnSpace& space, Subset keep);

Cocone colimit(const Diagram& diagram, const Limits& limits = {});
Cone limit(const Diagram& diagram, const Limits& limits = {});

// Tensor product: generated by boxes K1 x K2 over connected K1, K2.
ConnSpace tensor(const ConnSpace& a, const ConnSpace& b, const Limits& limits = {});

// Every partial map f(x, -) and f(-, y) is a morphism.
bool is_partially_connecting(const PointMap& f, const ConnSpace& x1, const ConnSpace& x2,
                             const ConnSpace& y);

// All morphisms x -> y in lexicographic table order. The candidate count
// |y|^|x| must stay within the hom guard.
std::vector<PointMap> hom_set(const ConnSpace& x, const ConnSpace& y, const Limits& limits = {});

// Streaming version; backtracks over point assignments with connected-set
// checks as soon as each set is fully assigned.
void for_each_morphism(const ConnSpace& x, const ConnSpace& y, const Limits& limits,
                       const std::function<void(const PointMap&)>& visit);

// Connectivity criterion on a set of morphisms, without materializing the
// space: M is connected when every single-point evaluation set <M, {x}> is
// connected in y. Exact for integral spaces.
bool hom_subset_connected(const ConnSpace& y, const std::vector<PointMap>& homs, Subset m);

struct HomSpace {
    ConnSpace space;             // carrier indexes `points`
    std::vector<PointMap> points;
};

// Materialized space of morphisms. The morphism count is bounded by the
// carrier guard since the structure enumerates its powerset.
HomSpace hom_space(const ConnSpace& x, const ConnSpace& y, const Limits& limits = {});

// Transposition across the tensor-hom correspondence: curry(psi)(y) is the
// morphism psi(-, y), an index into hom_set(x, z); uncurry inverts it.
PointMap curry(const PointMap& psi, const ConnSpace& x, const ConnSpace& y, const ConnSpace& z,
               const Limits& limits = {});
PointMap uncurry(const PointMap& phi, const ConnSpace& x, const ConnSpace& y, const ConnSpace& z,
                 const Limits& limits = {});

// A time space with marked start and end points.
struct Interval {
    ConnSpace space;
    std::size_t zero = 0;
    std::size_t one = 0;

    static Interval of(ConnSpace space, std::size_t zero, std::size_t one);
};

// h is a homotopy from f to g over i when its ends match f and g, every time
// slice h(t, -) is a morphism, and every trace h(-, x) is a morphism.
bool verify_homotopy(const PointMap& h, const PointMap& f, const PointMap& g, const Interval& i,
                     const ConnSpace& x, const ConnSpace& y);

// Exhaustive search for a homotopy witness; end rows are fixed, interior
// entries are enumerated within the search guard.
std::optional<PointMap> homotopic(const PointMap& f, const PointMap& g, const Interval& i,
                                  const ConnSpace& x, const ConnSpace& y,
                                  const Limits& limits = {});

// Same question answered through paths in the morphism space: a morphism
// from the time space into hom(x, y) hitting f at zero and g at one.
std::optional<PointMap> homotopic_via_hom(const PointMap& f, const PointMap& g, const Interval& i,
                                          const ConnSpace& x, const ConnSpace& y,
                                          const Limits& limits = {});

} // namespace connspace
