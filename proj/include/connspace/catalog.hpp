#pragma once

#include <utility>
#include <vector>

#include "connspace/space.hpp"

namespace connspace {

// Only the singletons are connected.
ConnSpace discrete(std::size_t n, const Limits& limits = {});

// Every subset is connected.
ConnSpace indiscrete(std::size_t n, const Limits& limits = {});

// The whole carrier is connected but no proper subset of two or more points
// is: remove any point and the rest falls apart.
ConnSpace brunnian(std::size_t n, const Limits& limits = {});

// Nonempty connected sets are the initial segments {0..k-1}; the tallest
// structure a carrier of size n admits.
ConnSpace v_space(std::size_t n, const Limits& limits = {});

// Connected sets are the subsets inducing a connected subgraph.
ConnSpace from_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                     const Limits& limits = {});

// Connected sets are the intervals of 0 < 1 < ... < n-1.
ConnSpace order_space(std::size_t n, const Limits& limits = {});

// Grafts a copy of y in place of the point p of x; y must be an irreducible
// space. Carrier is (|x| minus p) followed by the points of y.
ConnSpace compose_at(const ConnSpace& x, std::size_t p, const ConnSpace& y,
                     const Limits& limits = {});

// Grafts a copy of y onto every point of x at once. Carrier is |x| * |y|
// pairs in row-major order.
ConnSpace compose_all(const ConnSpace& x, const ConnSpace& y, const Limits& limits = {});

} // namespace connspace
