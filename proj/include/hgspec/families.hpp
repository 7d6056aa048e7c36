#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hgspec/hypergraph.hpp"

namespace hgspec {

enum class Family {
    loose_path,           // P_n: k-th power of the n-edge path
    loose_cycle,          // C_n: k-th power of the n-edge cycle
    cycle_star,           // C*_n: C_n plus a pendant edge at a degree-1 vertex of the last edge
    cycle_pendant_joint,  // C'_n: C_n plus a pendant edge at a joint
    c1,                   // two loops (u1,u3), (v1,v3) bridged by a path (u2,v2)
    c2,                   // three parallel paths between two branch edges
    c3,                   // two paths looping back to a single branch edge (k >= 4)
    power,                // k-th power of an arbitrary simple connected graph
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::loose_path: return "path";
        case Family::loose_cycle: return "cycle";
        case Family::cycle_star: return "cycle_star";
        case Family::cycle_pendant_joint: return "cycle_pendant";
        case Family::c1: return "C1";
        case Family::c2: return "C2";
        case Family::c3: return "C3";
        case Family::power: return "power";
    }
    return "?";
}

struct FamilySpec {
    Family family = Family::loose_path;
    std::vector<int> lengths;                              // path-length parameters
    std::vector<std::pair<VertexId, VertexId>> base_edges; // power only

    static FamilySpec loose_path(int n) { return {Family::loose_path, {n}, {}}; }
    static FamilySpec loose_cycle(int n) { return {Family::loose_cycle, {n}, {}}; }
    static FamilySpec cycle_star(int n) { return {Family::cycle_star, {n}, {}}; }
    static FamilySpec cycle_pendant_joint(int n) { return {Family::cycle_pendant_joint, {n}, {}}; }
    static FamilySpec c1(int l1, int l2, int l3) { return {Family::c1, {l1, l2, l3}, {}}; }
    static FamilySpec c2(int l1, int l2, int l3) { return {Family::c2, {l1, l2, l3}, {}}; }
    static FamilySpec c3(int l1, int l2) { return {Family::c3, {l1, l2}, {}}; }
    static FamilySpec power(std::vector<std::pair<VertexId, VertexId>> base) {
        return {Family::power, {}, std::move(base)};
    }

    /// Sorts the parameter positions the construction is symmetric in, so
    /// specs of isomorphic builds compare equal: C1 swaps its two loop
    /// lengths, C2 any of the three paths, C3 its two loops.
    FamilySpec normalized() const {
        FamilySpec s = *this;
        switch (family) {
            case Family::c1:
                if (s.lengths.size() >= 2 && s.lengths[0] < s.lengths[1])
                    std::swap(s.lengths[0], s.lengths[1]);
                break;
            case Family::c2:
            case Family::c3:
                std::sort(s.lengths.begin(), s.lengths.end(), std::greater<int>());
                break;
            default:
                break;
        }
        return s;
    }

    std::string params_string() const {
        std::string out;
        for (std::size_t i = 0; i < lengths.size(); ++i)
            out += (i ? "," : "") + std::to_string(lengths[i]);
        return out;
    }

    friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
        return a.family == b.family && a.lengths == b.lengths && a.base_edges == b.base_edges;
    }
};

namespace detail {

/// Allocates ids in two passes matching the canonical labeling: all joints
/// first, then all fillers in a deterministic order.
class CanonicalBuilder {
public:
    explicit CanonicalBuilder(int k) : k_(k) {}

    VertexId joint() { return next_joint_++; }

    /// Interior joints of a path of `length` edges between a and b.
    std::vector<VertexId> path_joints(VertexId a, VertexId b, int length) {
        std::vector<VertexId> js{a};
        for (int i = 1; i < length; ++i) js.push_back(joint());
        js.push_back(b);
        return js;
    }

    /// Registers an edge as its named vertices plus `fillers` fresh ones.
    void edge(std::vector<VertexId> named, int fillers) {
        pending_.push_back({std::move(named), fillers});
    }

    /// Path edges between consecutive joints, k-2 fillers each.
    void path(const std::vector<VertexId>& js) {
        for (std::size_t i = 0; i + 1 < js.size(); ++i) edge({js[i], js[i + 1]}, k_ - 2);
    }

    Hypergraph finish() {
        VertexId next = next_joint_;
        std::vector<Edge> edges;
        edges.reserve(pending_.size());
        for (auto& [named, fillers] : pending_) {
            Edge e = std::move(named);
            for (int i = 0; i < fillers; ++i) e.push_back(next++);
            edges.push_back(std::move(e));
        }
        return Hypergraph(k_, next, std::move(edges));
    }

private:
    int k_;
    VertexId next_joint_ = 0;
    std::vector<std::pair<std::vector<VertexId>, int>> pending_;
};

inline void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

inline Hypergraph build_loose_cycle(int n, int k) {
    CanonicalBuilder b(k);
    std::vector<VertexId> spine;
    for (int i = 0; i < n; ++i) spine.push_back(b.joint());
    for (int i = 0; i < n; ++i)
        b.edge({spine[i], spine[(i + 1) % n]}, k - 2);
    return b.finish();
}

inline Hypergraph append_pendant_edge(const Hypergraph& H, VertexId at) {
    std::vector<Edge> edges = H.edges();
    Edge pendant{at};
    for (int i = 1; i < H.k(); ++i)
        pendant.push_back(H.vertex_count() + static_cast<VertexId>(i - 1));
    edges.push_back(std::move(pendant));
    return Hypergraph(H.k(), H.vertex_count() + H.k() - 1, std::move(edges));
}

}  // namespace detail

inline Hypergraph build(const FamilySpec& raw, int k) {
    using detail::require;
    require(k >= 3, "build: uniformity k must be >= 3");
    FamilySpec spec = raw.normalized();
    const auto& L = spec.lengths;

    switch (spec.family) {
        case Family::loose_path: {
            require(L.size() == 1 && L[0] >= 1, "build: loose path needs length >= 1");
            detail::CanonicalBuilder b(k);
            std::vector<VertexId> spine;
            for (int i = 0; i <= L[0]; ++i) spine.push_back(b.joint());
            b.path(spine);
            return b.finish();
        }
        case Family::loose_cycle: {
            require(L.size() == 1 && L[0] >= 2, "build: loose cycle needs length >= 2");
            return detail::build_loose_cycle(L[0], k);
        }
        case Family::cycle_star: {
            require(L.size() == 1 && L[0] >= 2, "build: cycle star needs cycle length >= 2");
            Hypergraph cyc = detail::build_loose_cycle(L[0], k);
            // first filler of the last cycle edge: a degree-1 vertex of e_n
            VertexId u = static_cast<VertexId>(L[0] + (L[0] - 1) * (k - 2));
            return detail::append_pendant_edge(cyc, u);
        }
        case Family::cycle_pendant_joint: {
            require(L.size() == 1 && L[0] >= 2, "build: cycle pendant needs cycle length >= 2");
            return detail::append_pendant_edge(detail::build_loose_cycle(L[0], k), 0);
        }
        case Family::c1: {
            require(L.size() == 3 && std::all_of(L.begin(), L.end(), [](int l) { return l >= 1; }),
                    "build: C1 needs three path lengths >= 1");
            detail::CanonicalBuilder b(k);
            VertexId u1 = b.joint(), u2 = b.joint(), u3 = b.joint();
            VertexId v1 = b.joint(), v2 = b.joint(), v3 = b.joint();
            auto p1 = b.path_joints(u1, u3, L[0]);
            auto p2 = b.path_joints(v1, v3, L[1]);
            auto p3 = b.path_joints(u2, v2, L[2]);
            b.edge({u1, u2, u3}, k - 3);
            b.edge({v1, v2, v3}, k - 3);
            b.path(p1);
            b.path(p2);
            b.path(p3);
            return b.finish();
        }
        case Family::c2: {
            require(L.size() == 3 && std::all_of(L.begin(), L.end(), [](int l) { return l >= 1; }),
                    "build: C2 needs three path lengths >= 1");
            detail::CanonicalBuilder b(k);
            VertexId u1 = b.joint(), u2 = b.joint(), u3 = b.joint();
            VertexId v1 = b.joint(), v2 = b.joint(), v3 = b.joint();
            auto p1 = b.path_joints(u1, v1, L[0]);
            auto p2 = b.path_joints(u2, v2, L[1]);
            auto p3 = b.path_joints(u3, v3, L[2]);
            b.edge({u1, u2, u3}, k - 3);
            b.edge({v1, v2, v3}, k - 3);
            b.path(p1);
            b.path(p2);
            b.path(p3);
            return b.finish();
        }
        case Family::c3: {
            require(L.size() == 2 && L[0] >= 1 && L[1] >= 1,
                    "build: C3 needs two path lengths >= 1");
            require(k >= 4, "build: C3 needs k >= 4 for four distinct anchors in one edge");
            detail::CanonicalBuilder b(k);
            VertexId u1 = b.joint(), u2 = b.joint(), v1 = b.joint(), v2 = b.joint();
            auto p1 = b.path_joints(u1, u2, L[0]);
            auto p2 = b.path_joints(v1, v2, L[1]);
            b.edge({u1, u2, v1, v2}, k - 4);
            b.path(p1);
            b.path(p2);
            return b.finish();
        }
        case Family::power: {
            const auto& base = spec.base_edges;
            require(!base.empty(), "build: power needs at least one base edge");
            VertexId nb = 0;
            for (auto [a, c] : base) {
                require(a != c, "build: power base has a self-loop");
                nb = std::max({nb, a + 1, c + 1});
            }
            std::vector<Edge> pairs;
            for (auto [a, c] : base) pairs.push_back({std::min(a, c), std::max(a, c)});
            std::sort(pairs.begin(), pairs.end());
            require(std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end(),
                    "build: power base has a duplicate edge");
            std::vector<Edge> edges;
            VertexId next = nb;
            for (const Edge& p : pairs) {
                Edge e = p;
                for (int i = 0; i < k - 2; ++i) e.push_back(next++);
                edges.push_back(std::move(e));
            }
            Hypergraph H(k, next, std::move(edges));  // rejects sparse base ids
            require(H.is_connected(), "build: power base must be connected");
            return H;
        }
    }
    throw std::invalid_argument("build: unknown family");
}

/// The base: delete pendant edges (and the vertices this isolates) until
/// none remain. Requires at least one cycle, otherwise deletion would
/// consume the whole hypergraph.
inline Hypergraph base_of(const Hypergraph& H) {
    if (H.cyclomatic_number() < 1)
        throw std::invalid_argument("base_of: hypergraph is acyclic");

    std::vector<Edge> edges = H.edges();
    const int k = H.k();
    bool removed = true;
    while (removed) {
        removed = false;
        std::vector<int> deg(H.vertex_count(), 0);
        for (const Edge& e : edges)
            for (VertexId v : e) ++deg[v];
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int pendants = 0;
            for (VertexId v : edges[i])
                if (deg[v] == 1) ++pendants;
            if (pendants >= k - 1) {
                edges.erase(edges.begin() + static_cast<long>(i));
                removed = true;
                break;
            }
        }
    }

    // order-preserving compaction of the surviving vertex ids
    std::vector<VertexId> newid(H.vertex_count(), kNoVertex);
    VertexId next = 0;
    for (VertexId v = 0; v < H.vertex_count(); ++v)
        for (const Edge& e : edges)
            if (std::binary_search(e.begin(), e.end(), v)) {
                newid[v] = next++;
                break;
            }
    for (Edge& e : edges)
        for (VertexId& v : e) v = newid[v];
    return Hypergraph(k, next, std::move(edges));
}

/// Replaces e = {u, fillers..., v} by f1 = {u, fresh fillers, w} and
/// f2 = {w, old fillers, v} with a fresh joint w. All vertices of e other
/// than u and v must have degree 1.
inline Hypergraph subdivide_edge(const Hypergraph& H, const Edge& e, VertexId u, VertexId v) {
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    EdgeIndex idx = H.edge_index(sorted);
    if (u == v || !std::binary_search(sorted.begin(), sorted.end(), u) ||
        !std::binary_search(sorted.begin(), sorted.end(), v))
        throw std::invalid_argument("subdivide_edge: u and v must be distinct vertices of e");
    for (VertexId x : sorted)
        if (x != u && x != v && H.degree(x) != 1)
            throw std::invalid_argument("subdivide_edge: interior vertices of e must have degree 1");

    const int k = H.k();
    VertexId w = H.vertex_count();
    Edge f1{u, w};
    for (int i = 1; i <= k - 2; ++i) f1.push_back(w + static_cast<VertexId>(i));
    Edge f2{w, v};
    for (VertexId x : sorted)
        if (x != u && x != v) f2.push_back(x);

    std::vector<Edge> edges;
    for (EdgeIndex i = 0; i < H.edge_count(); ++i)
        if (i != idx) edges.push_back(H.edge(i));
    edges.push_back(std::move(f1));
    edges.push_back(std::move(f2));
    return Hypergraph(k, w + static_cast<VertexId>(k - 1), std::move(edges));
}

}  // namespace hgspec
