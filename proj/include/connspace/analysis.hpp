#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "connspace/space.hpp"

namespace connspace {

// Abstract directed graph shape, used when only vertices and edges matter.
struct Dag {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // source -> target

    friend bool operator==(const Dag& a, const Dag& b) {
        return a.vertex_count == b.vertex_count && a.edges == b.edges;
    }
};

// The generic graph of an integral space: one vertex per nonempty irreducible
// connected set (in canonical order), one edge per covering pair of the
// strict-containment order.
struct GenericGraph {
    std::vector<Subset> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // bigger -> smaller

    Dag shape() const { return Dag{vertices.size(), edges}; }
};

struct IndexReport {
    std::size_t space_index = 0;
    GenericGraph graph;
    std::vector<std::size_t> heights; // aligned with graph.vertices; sinks are 0
};

// Both sides of every graph/space correspondence, computed independently.
struct GraphReport {
    bool graph_connected = false;
    std::size_t graph_component_count = 0;
    std::size_t source_count = 0;
    bool has_convergent_pair = false; // some vertex with two distinct parents
    bool is_directed_tree = false;

    bool space_connected = false;
    std::size_t space_component_count = 0;
    bool space_irreducible = false;
    bool space_distinguished = false;
};

// A nonempty member k is reducible when two proper members overlap and unite
// to k; on finite carriers this pair criterion is equivalent to k being
// generated by the other connected sets.
bool is_reducible(const ConnSpace& space, Subset k);

// All nonempty irreducible members, in canonical order. These are the minimal
// generating family of the structure.
SubsetFamily irreducibles(const ConnSpace& space);

// Every nonempty connected set is irreducible.
bool is_distinguished(const ConnSpace& space);

// The whole carrier is nonempty, connected, and irreducible.
bool is_irreducible_space(const ConnSpace& space);

// Adds the whole carrier to the structure (no other change can be needed).
ConnSpace brunnian_closure(const ConnSpace& space);

GenericGraph generic_graph(const ConnSpace& space, const Limits& limits = {});

// Reconstructs the space a DAG would be the generic graph of: points are the
// sinks, each vertex contributes its set of reachable sinks as a generator.
// Fails with NotRealizable when the rebuilt space's generic graph is not
// isomorphic to the input shape.
ConnSpace realize_dag(const Dag& dag, const Limits& limits = {});
ConnSpace space_from_generic_graph(const GenericGraph& graph, const Limits& limits = {});

// Longest-path height of each vertex above the sinks; the space's
// connectivity index is the maximum.
IndexReport connectivity_index(const ConnSpace& space, const Limits& limits = {});

GraphReport graph_report(const ConnSpace& space, const Limits& limits = {});

// Abstract digraph isomorphism (backtracking with degree profiles).
bool dag_isomorphic(const Dag& a, const Dag& b);

} // namespace connspace
