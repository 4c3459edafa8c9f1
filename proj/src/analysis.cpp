#include "connspace/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "connspace/generation.hpp"

namespace connspace {

bool is_reducible(const ConnSpace& space, Subset k) {
    if (!space.ground().admits(k))
        raise(Errc::bad_argument, "subset lies outside the carrier");
    if (!space.is_connected(k))
        raise(Errc::not_connected, "set " + space.ground().describe(k) + " is not connected");
    if (k.is_empty())
        raise(Errc::not_connected, "reducibility is defined for nonempty connected sets");

    // Proper connected subsets of k, by canonical order.
    std::vector<Subset> inside;
    for (Subset a : space.structure().members())
        if (a != k && !a.is_empty() && a.subset_of(k)) inside.push_back(a);

    for (std::size_t i = 0; i < inside.size(); ++i) {
        for (std::size_t j = i + 1; j < inside.size(); ++j) {
            if ((inside[i] | inside[j]) == k && inside[i].intersects(inside[j])) return true;
        }
    }
    return false;
}

SubsetFamily irreducibles(const ConnSpace& space) {
    std::vector<Subset> out;
    for (Subset k : space.structure().members()) {
        if (k.is_empty()) continue;
        if (!is_reducible(space, k)) out.push_back(k);
    }
    return SubsetFamily(std::move(out));
}

bool is_distinguished(const ConnSpace& space) {
    for (Subset k : space.structure().members()) {
        if (k.is_empty()) continue;
        if (is_reducible(space, k)) return false;
    }
    return true;
}

bool is_irreducible_space(const ConnSpace& space) {
    if (space.size() == 0) return false;
    Subset whole = space.carrier();
    if (!space.is_connected(whole)) return false;
    return !is_reducible(space, whole);
}

ConnSpace brunnian_closure(const ConnSpace& space) {
    if (space.size() == 0) return space;
    SubsetFamily family = space.structure().united(SubsetFamily({space.carrier()}));
    return ConnSpace::trusted(space.ground(), std::move(family), space.integral());
}

GenericGraph generic_graph(const ConnSpace& space, const Limits& limits) {
    if (!space.integral())
        raise(Errc::not_integral, "the generic graph is defined for integral spaces");

    GenericGraph g;
    g.vertices = irreducibles(space).members();

    // Strict containment, then drop edges implied by a two-step path. The
    // containment order is transitively closed, so this yields the covering
    // relation.
    std::size_t m = g.vertices.size();
    std::vector<std::vector<bool>> contains(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && g.vertices[j].subset_of(g.vertices[i]) && g.vertices[i] != g.vertices[j])
                contains[i][j] = true;

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!contains[i][j]) continue;
            bool covered = true;
            for (std::size_t k = 0; k < m; ++k) {
                if (contains[i][k] && contains[k][j]) {
                    covered = false;
                    break;
                }
            }
            if (covered) g.edges.emplace_back(i, j);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    (void)limits;
    return g;
}

namespace {

std::vector<std::size_t> out_degrees(const Dag& d) {
    std::vector<std::size_t> deg(d.vertex_count, 0);
    for (auto [s, t] : d.edges) ++deg[s];
    return deg;
}

std::vector<std::size_t> in_degrees(const Dag& d) {
    std::vector<std::size_t> deg(d.vertex_count, 0);
    for (auto [s, t] : d.edges) ++deg[t];
    return deg;
}

void check_dag(const Dag& d) {
    for (auto [s, t] : d.edges) {
        if (s >= d.vertex_count || t >= d.vertex_count)
            raise(Errc::invalid_edge, "edge endpoint outside the vertex range");
        if (s == t) raise(Errc::invalid_edge, "self-loop is not acyclic");
    }
    // Kahn's algorithm; leftovers mean a cycle.
    std::vector<std::vector<std::size_t>> succ(d.vertex_count);
    auto indeg = in_degrees(d);
    for (auto [s, t] : d.edges) succ[s].push_back(t);
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < d.vertex_count; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t seen = 0;
    while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        ++seen;
        for (std::size_t w : succ[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    if (seen != d.vertex_count) raise(Errc::invalid_edge, "input graph has a cycle");
}

} // namespace

ConnSpace realize_dag(const Dag& dag, const Limits& limits) {
    check_dag(dag);

    auto outdeg = out_degrees(dag);
    std::vector<std::size_t> sink_index(dag.vertex_count, SIZE_MAX);
    std::size_t sinks = 0;
    for (std::size_t v = 0; v < dag.vertex_count; ++v)
        if (outdeg[v] == 0) sink_index[v] = sinks++;
    check_carrier(sinks, limits);

    // Reachable sink sets, by depth-first walk per vertex.
    std::vector<std::vector<std::size_t>> succ(dag.vertex_count);
    for (auto [s, t] : dag.edges) succ[s].push_back(t);
    std::vector<Subset> reach(dag.vertex_count);
    std::vector<int> state(dag.vertex_count, 0);
    auto visit = [&](auto&& self, std::size_t v) -> Subset {
        if (state[v] == 2) return reach[v];
        state[v] = 2;
        Subset r;
        if (sink_index[v] != SIZE_MAX) r = r.with(sink_index[v]);
        for (std::size_t w : succ[v]) r = r | self(self, w);
        reach[v] = r;
        return r;
    };
    std::vector<Subset> generators;
    for (std::size_t v = 0; v < dag.vertex_count; ++v) generators.push_back(visit(visit, v));

    ConnSpace rebuilt =
        generate(GroundSet::of(sinks), SubsetFamily(std::move(generators)), true, limits);
    GenericGraph back = generic_graph(rebuilt, limits);
    if (!dag_isomorphic(back.shape(), dag))
        raise(Errc::not_realizable, "no space has this graph as its generic graph");
    return rebuilt;
}

ConnSpace space_from_generic_graph(const GenericGraph& graph, const Limits& limits) {
    return realize_dag(graph.shape(), limits);
}

IndexReport connectivity_index(const ConnSpace& space, const Limits& limits) {
    if (!space.integral())
        raise(Errc::not_integral, "the connectivity index is defined for integral spaces");
    if (space.size() == 0)
        raise(Errc::no_index_for_empty_space, "the empty space has no connectivity index");

    IndexReport report;
    report.graph = generic_graph(space, limits);
    std::size_t m = report.graph.vertices.size();
    report.heights.assign(m, 0);

    // Vertices only point to strictly smaller sets, so ascending canonical
    // order is a topological order from the sinks up.
    std::vector<std::vector<std::size_t>> succ(m);
    for (auto [s, t] : report.graph.edges) succ[s].push_back(t);
    for (std::size_t v = 0; v < m; ++v) {
        for (std::size_t w : succ[v])
            report.heights[v] = std::max(report.heights[v], report.heights[w] + 1);
    }
    report.space_index = *std::max_element(report.heights.begin(), report.heights.end());
    return report;
}

namespace {

std::size_t count_weak_components(const Dag& d) {
    if (d.vertex_count == 0) return 0;
    std::vector<std::size_t> parent(d.vertex_count);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [s, t] : d.edges) parent[find(s)] = find(t);
    std::size_t count = 0;
    for (std::size_t v = 0; v < d.vertex_count; ++v)
        if (find(v) == v) ++count;
    return count;
}

} // namespace

GraphReport graph_report(const ConnSpace& space, const Limits& limits) {
    if (!space.integral())
        raise(Errc::not_integral, "the graph report is defined for integral spaces");

    GraphReport r;
    GenericGraph g = generic_graph(space, limits);
    Dag shape = g.shape();

    r.graph_component_count = count_weak_components(shape);
    r.graph_connected = (shape.vertex_count > 0) && r.graph_component_count == 1;
    auto indeg = in_degrees(shape);
    for (std::size_t v = 0; v < shape.vertex_count; ++v) {
        if (indeg[v] == 0) ++r.source_count;
        if (indeg[v] >= 2) r.has_convergent_pair = true;
    }
    r.is_directed_tree =
        r.graph_connected && r.source_count == 1 && !r.has_convergent_pair;

    r.space_connected = space.size() > 0 && space.is_connected(space.carrier());
    r.space_component_count = connected_components(space).size();
    r.space_irreducible = is_irreducible_space(space);
    r.space_distinguished = is_distinguished(space);
    return r;
}

namespace {

struct DagIso {
    const Dag& a;
    const Dag& b;
    std::vector<std::vector<bool>> adj_a, adj_b;
    std::vector<std::vector<bool>> compatible;
    std::vector<std::size_t> assignment;
    std::vector<bool> used;

    DagIso(const Dag& a_, const Dag& b_) : a(a_), b(b_) {
        std::size_t n = a.vertex_count;
        adj_a.assign(n, std::vector<bool>(n, false));
        adj_b.assign(n, std::vector<bool>(n, false));
        for (auto [s, t] : a.edges) adj_a[s][t] = true;
        for (auto [s, t] : b.edges) adj_b[s][t] = true;
        auto ia = in_degrees(a), oa = out_degrees(a);
        auto ib = in_degrees(b), ob = out_degrees(b);
        compatible.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                compatible[i][j] = (ia[i] == ib[j] && oa[i] == ob[j]);
        assignment.assign(n, 0);
        used.assign(n, false);
    }

    bool extend(std::size_t depth) {
        std::size_t n = a.vertex_count;
        if (depth == n) return true;
        for (std::size_t img = 0; img < n; ++img) {
            if (used[img] || !compatible[depth][img]) continue;
            bool ok = true;
            for (std::size_t prev = 0; prev < depth; ++prev) {
                if (adj_a[depth][prev] != adj_b[img][assignment[prev]] ||
                    adj_a[prev][depth] != adj_b[assignment[prev]][img]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assignment[depth] = img;
            used[img] = true;
            if (extend(depth + 1)) return true;
            used[img] = false;
        }
        return false;
    }
};

} // namespace

bool dag_isomorphic(const Dag& a, const Dag& b) {
    if (a.vertex_count != b.vertex_count) return false;
    if (a.edges.size() != b.edges.size()) return false;
    if (a.vertex_count == 0) return true;
    DagIso search(a, b);
    return search.extend(0);
}

} // namespace connspace
