#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hgspec/hypergraph.hpp"
#include "hgspec/spectral.hpp"

namespace hgspec {

/// Replace each listed edge e_i by (e_i minus {v_i}) union {target}.
struct MoveSpec {
    VertexId target = 0;
    std::vector<std::pair<EdgeIndex, VertexId>> relocations;
};

/// Replace degree-2 vertex w by a fresh edge (u_1, ..., u_k); each edge
/// formerly at w reattaches to u_1 (front) or u_k (back). u_1 reuses w's
/// id, the k-1 fresh vertices go on top of the id range with u_k last.
struct SplitSpec {
    VertexId w = 0;
    std::vector<EdgeIndex> to_front;
    std::vector<EdgeIndex> to_back;
};

/// Swap the listed degree->=2 vertices of one edge for fresh degree-1
/// vertices; the released vertices keep their other incidences.
struct ReleaseSpec {
    EdgeIndex edge = 0;
    std::vector<VertexId> released;
};

/// A transformed hypergraph plus the map old id -> new id (kNoVertex for
/// vertices the transform isolated and pruned).
struct TransformResult {
    Hypergraph graph;
    std::vector<VertexId> relabeling;
};

inline TransformResult move_edges(const Hypergraph& H, const MoveSpec& spec) {
    if (spec.target >= H.vertex_count())
        throw std::invalid_argument("move_edges: target vertex out of range");
    std::set<EdgeIndex> moved;
    std::vector<Edge> edges = H.edges();
    std::vector<Edge> created;
    for (auto [ei, vi] : spec.relocations) {
        if (ei >= H.edge_count())
            throw std::invalid_argument("move_edges: edge index out of range");
        if (!moved.insert(ei).second)
            throw std::invalid_argument("move_edges: edge listed twice");
        const Edge& e = H.edge(ei);
        if (!std::binary_search(e.begin(), e.end(), vi))
            throw std::invalid_argument("move_edges: vertex not in the listed edge");
        if (std::binary_search(e.begin(), e.end(), spec.target))
            throw std::invalid_argument("move_edges: target already lies in the listed edge");
        Edge moved_edge;
        for (VertexId x : e)
            if (x != vi) moved_edge.push_back(x);
        moved_edge.push_back(spec.target);
        std::sort(moved_edge.begin(), moved_edge.end());
        if (H.has_edge(moved_edge))
            throw std::invalid_argument("move_edges: duplicate resulting edge");
        created.push_back(moved_edge);
        edges[ei] = std::move(moved_edge);
    }
    std::sort(created.begin(), created.end());
    if (std::adjacent_find(created.begin(), created.end()) != created.end())
        throw std::invalid_argument("move_edges: duplicate resulting edge");

    // moving away a degree-1 vertex isolates it; prune and record
    std::vector<int> deg(H.vertex_count(), 0);
    for (const Edge& e : edges)
        for (VertexId v : e) ++deg[v];
    std::vector<VertexId> relabeling(H.vertex_count(), kNoVertex);
    VertexId next = 0;
    for (VertexId v = 0; v < H.vertex_count(); ++v)
        if (deg[v] > 0) relabeling[v] = next++;
    for (Edge& e : edges)
        for (VertexId& v : e) v = relabeling[v];
    return {Hypergraph(H.k(), next, std::move(edges)), std::move(relabeling)};
}

inline TransformResult split_vertex(const Hypergraph& H, const SplitSpec& spec) {
    if (spec.w >= H.vertex_count())
        throw std::invalid_argument("split_vertex: vertex out of range");
    if (H.degree(spec.w) != 2)
        throw std::invalid_argument("split_vertex: vertex must have degree 2");
    std::vector<EdgeIndex> assigned = spec.to_front;
    assigned.insert(assigned.end(), spec.to_back.begin(), spec.to_back.end());
    std::sort(assigned.begin(), assigned.end());
    if (assigned != H.incident_edges(spec.w))
        throw std::invalid_argument(
            "split_vertex: assignment must partition the incident edges of w");

    const int k = H.k();
    const VertexId n = H.vertex_count();
    const VertexId back = n + static_cast<VertexId>(k - 2);  // u_k
    std::vector<Edge> edges = H.edges();
    for (EdgeIndex ei : spec.to_back)
        for (VertexId& v : edges[ei])
            if (v == spec.w) v = back;
    Edge fresh{spec.w};
    for (VertexId v = n; v <= back; ++v) fresh.push_back(v);
    edges.push_back(std::move(fresh));

    std::vector<VertexId> relabeling(n);
    for (VertexId v = 0; v < n; ++v) relabeling[v] = v;
    return {Hypergraph(k, n + static_cast<VertexId>(k - 1), std::move(edges)),
            std::move(relabeling)};
}

inline TransformResult release_vertices(const Hypergraph& H, const ReleaseSpec& spec) {
    if (spec.edge >= H.edge_count())
        throw std::invalid_argument("release_vertices: edge index out of range");
    const Edge& e = H.edge(spec.edge);
    std::set<VertexId> released(spec.released.begin(), spec.released.end());
    if (released.size() != spec.released.size())
        throw std::invalid_argument("release_vertices: vertex listed twice");
    if (released.empty())
        throw std::invalid_argument("release_vertices: at least one vertex required");
    int s = 0;
    for (VertexId v : e)
        if (H.degree(v) >= 2) ++s;
    if (static_cast<int>(released.size()) >= s)
        throw std::invalid_argument(
            "release_vertices: must leave at least one vertex of degree >= 2 in the edge");
    for (VertexId v : released) {
        if (!std::binary_search(e.begin(), e.end(), v))
            throw std::invalid_argument("release_vertices: vertex not in the edge");
        if (H.degree(v) < 2)
            throw std::invalid_argument("release_vertices: released vertex must have degree >= 2");
    }

    std::vector<Edge> edges = H.edges();
    VertexId fresh = H.vertex_count();
    for (VertexId& v : edges[spec.edge])
        if (released.count(v)) v = fresh++;
    std::vector<VertexId> relabeling(H.vertex_count());
    for (VertexId v = 0; v < H.vertex_count(); ++v) relabeling[v] = v;
    return {Hypergraph(H.k(), fresh, std::move(edges)), std::move(relabeling)};
}

/// The degree-2 split with one incident edge kept at the front endpoint and
/// the other sent to the back, lengthening the path through w by one edge.
inline SplitSpec split_at(const Hypergraph& H, VertexId w) {
    if (w >= H.vertex_count() || H.degree(w) != 2)
        throw std::invalid_argument("split_at: vertex must have degree 2");
    const std::vector<EdgeIndex>& inc = H.incident_edges(w);
    return {w, {inc[0]}, {inc[1]}};
}

/// Joints of internal paths whose anchor edges both carry at least three
/// vertices of degree >= 2 — the hypothesis under which splitting there is
/// known to lower the spectral radius.
inline std::vector<VertexId> eligible_split_joints(const Hypergraph& H) {
    auto heavy = [&H](EdgeIndex e) {
        int deep = 0;
        for (VertexId v : H.edge(e))
            if (H.degree(v) >= 2) ++deep;
        return deep >= 3;
    };
    std::set<VertexId> joints;
    for (const LoosePathLocator& path : find_internal_paths(H))
        if (heavy(path.anchor_front) && heavy(path.anchor_back))
            joints.insert(path.joints.begin(), path.joints.end());
    return {joints.begin(), joints.end()};
}

/// Eigenvector condition under which moving the listed edges onto the
/// target strictly raises the spectral radius: x_target >= x_{v_i} for
/// every relocated incidence.
inline bool move_hypothesis_holds(const Hypergraph& H, const MoveSpec& spec,
                                  const SpectralResult& principal) {
    if (principal.eigenvector.size() != H.vertex_count())
        throw std::invalid_argument("move_hypothesis_holds: eigenvector length mismatch");
    for (auto [ei, vi] : spec.relocations) {
        (void)ei;
        if (principal.eigenvector[spec.target] < principal.eigenvector[vi]) return false;
    }
    return true;
}

/// Computes both spectral radii and reports whether the split strictly
/// lowered rho by more than tol.
inline bool splitting_is_rho_decreasing(const Hypergraph& H, const SplitSpec& spec,
                                        double tol = 1e-9) {
    double before = spectral_radius(H).rho;
    double after = spectral_radius(split_vertex(H, spec).graph).rho;
    return after < before - tol;
}

}  // namespace hgspec
