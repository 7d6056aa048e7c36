#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgspec {

using VertexId = std::uint32_t;
using EdgeIndex = std::size_t;

/// An edge is a strictly sorted list of k distinct vertex ids.
using Edge = std::vector<VertexId>;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Immutable simple k-uniform hypergraph (k >= 3) over dense vertex ids
/// [0, n). Every vertex must lie in at least one edge, and the edge list is
/// kept in lexicographic order so equal hypergraphs compare equal.
class Hypergraph {
public:
    Hypergraph(int k, VertexId n, std::vector<Edge> edges)
        : k_(k), n_(n), edges_(std::move(edges)) {
        if (k_ < 3)
            throw std::invalid_argument("hypergraph: uniformity k must be >= 3");
        if (edges_.empty())
            throw std::invalid_argument("hypergraph: at least one edge required");
        for (Edge& e : edges_) {
            if (e.size() != static_cast<std::size_t>(k_))
                throw std::invalid_argument("hypergraph: edge arity differs from k");
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("hypergraph: repeated vertex inside an edge");
            if (e.back() >= n_)
                throw std::invalid_argument("hypergraph: vertex id out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("hypergraph: duplicate edge");

        degrees_.assign(n_, 0);
        incidence_.assign(n_, {});
        for (EdgeIndex i = 0; i < edges_.size(); ++i)
            for (VertexId v : edges_[i]) {
                ++degrees_[v];
                incidence_[v].push_back(i);
            }
        for (VertexId v = 0; v < n_; ++v)
            if (degrees_[v] == 0)
                throw std::invalid_argument("hypergraph: isolated vertex " + std::to_string(v));
        components_ = count_components();
    }

    int k() const { return k_; }
    VertexId vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

    int degree(VertexId v) const {
        check_vertex(v);
        return degrees_[v];
    }
    const std::vector<int>& degrees() const { return degrees_; }

    /// Indices of the edges containing v, ascending.
    const std::vector<EdgeIndex>& incident_edges(VertexId v) const {
        check_vertex(v);
        return incidence_[v];
    }

    bool has_edge(const Edge& sorted_vertices) const {
        return std::binary_search(edges_.begin(), edges_.end(), sorted_vertices);
    }

    /// Index of an edge given by its (sorted) vertex set; throws if absent.
    EdgeIndex edge_index(const Edge& sorted_vertices) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted_vertices);
        if (it == edges_.end() || *it != sorted_vertices)
            throw std::invalid_argument("hypergraph: edge not present");
        return static_cast<EdgeIndex>(it - edges_.begin());
    }

    int component_count() const { return components_; }
    bool is_connected() const { return components_ == 1; }

    /// c(H) = m(k-1) - n + p, the cycle rank of the Konig representation.
    long cyclomatic_number() const {
        return static_cast<long>(edge_count()) * (k_ - 1) - static_cast<long>(n_) + components_;
    }

    /// Copy with vertex ids mapped through a permutation of [0, n).
    Hypergraph relabeled(const std::vector<VertexId>& perm) const {
        if (perm.size() != n_)
            throw std::invalid_argument("relabeled: permutation size differs from n");
        std::vector<bool> seen(n_, false);
        for (VertexId img : perm) {
            if (img >= n_ || seen[img])
                throw std::invalid_argument("relabeled: not a permutation");
            seen[img] = true;
        }
        std::vector<Edge> mapped(edges_.size());
        for (EdgeIndex i = 0; i < edges_.size(); ++i) {
            mapped[i].reserve(k_);
            for (VertexId v : edges_[i]) mapped[i].push_back(perm[v]);
        }
        return Hypergraph(k_, n_, std::move(mapped));
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Hypergraph& a, const Hypergraph& b) { return !(a == b); }

private:
    void check_vertex(VertexId v) const {
        if (v >= n_)
            throw std::invalid_argument("hypergraph: vertex id out of range");
    }

    int count_components() const {
        std::vector<bool> seen(n_, false);
        std::vector<VertexId> stack;
        int parts = 0;
        for (VertexId s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            ++parts;
            seen[s] = true;
            stack.assign(1, s);
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                for (EdgeIndex e : incidence_[v])
                    for (VertexId u : edges_[e])
                        if (!seen[u]) {
                            seen[u] = true;
                            stack.push_back(u);
                        }
            }
        }
        return parts;
    }

    int k_;
    VertexId n_;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<EdgeIndex>> incidence_;
    int components_ = 0;
};

inline int degree(const Hypergraph& H, VertexId v) { return H.degree(v); }
inline bool is_connected(const Hypergraph& H) { return H.is_connected(); }
inline long cyclomatic_number(const Hypergraph& H) { return H.cyclomatic_number(); }

/// Bipartite incidence (Konig) graph: one node per vertex, one per edge,
/// one link per incidence.
struct KonigGraph {
    VertexId vertex_nodes = 0;
    std::size_t edge_nodes = 0;
    std::vector<std::pair<VertexId, EdgeIndex>> links;  // (vertex, edge), edge-major

    std::size_t node_count() const { return vertex_nodes + edge_nodes; }
};

inline KonigGraph konig_representation(const Hypergraph& H) {
    KonigGraph K;
    K.vertex_nodes = H.vertex_count();
    K.edge_nodes = H.edge_count();
    K.links.reserve(H.edge_count() * H.k());
    for (EdgeIndex e = 0; e < H.edge_count(); ++e)
        for (VertexId v : H.edge(e)) K.links.emplace_back(v, e);
    return K;
}

namespace detail {

struct KonigAdjacency {
    // node ids: [0, n) vertex nodes, [n, n+m) edge nodes
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> nbr;  // (node, link)

    explicit KonigAdjacency(const KonigGraph& K) : nbr(K.node_count()) {
        for (std::size_t l = 0; l < K.links.size(); ++l) {
            std::size_t a = K.links[l].first;
            std::size_t b = K.vertex_nodes + K.links[l].second;
            nbr[a].emplace_back(b, l);
            nbr[b].emplace_back(a, l);
        }
    }
};

}  // namespace detail

/// cycle rank of the Konig graph: links - nodes + components
inline long konig_cycle_rank(const KonigGraph& K) {
    detail::KonigAdjacency adj(K);
    std::vector<bool> seen(K.node_count(), false);
    std::vector<std::size_t> stack;
    long parts = 0;
    for (std::size_t s = 0; s < K.node_count(); ++s) {
        if (seen[s]) continue;
        ++parts;
        seen[s] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (auto [u, l] : adj.nbr[v])
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
    }
    return static_cast<long>(K.links.size()) - static_cast<long>(K.node_count()) + parts;
}

/// A Berge cycle v_0 e_0 v_1 e_1 ... v_{M-1} e_{M-1} v_0: edges[i] contains
/// vertices[i] and vertices[(i+1) % M], all vertices and edges distinct.
struct BergeCycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeIndex> edges;
};

/// Fundamental cycle basis of the Konig graph via a BFS spanning forest.
/// Basis size equals the cycle rank; each fundamental cycle alternates
/// vertex and edge nodes, reported as a BergeCycle.
inline std::vector<BergeCycle> cycle_basis(const KonigGraph& K) {
    detail::KonigAdjacency adj(K);
    const std::size_t N = K.node_count();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(N, none), depth(N, 0);
    std::vector<bool> seen(N, false);
    std::vector<bool> tree_link(K.links.size(), false);

    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < N; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::size_t v = queue[qi];
            for (auto [u, l] : adj.nbr[v])
                if (!seen[u]) {
                    seen[u] = true;
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    tree_link[l] = true;
                    queue.push_back(u);
                }
        }
    }

    std::vector<BergeCycle> basis;
    for (std::size_t l = 0; l < K.links.size(); ++l) {
        if (tree_link[l]) continue;
        std::size_t a = K.links[l].first;
        std::size_t b = K.vertex_nodes + K.links[l].second;
        // tree paths from both endpoints up to their lowest common ancestor
        std::vector<std::size_t> pa{a}, pb{b};
        std::size_t x = a, y = b;
        while (depth[x] > depth[y]) pa.push_back(x = parent[x]);
        while (depth[y] > depth[x]) pb.push_back(y = parent[y]);
        while (x != y) {
            pa.push_back(x = parent[x]);
            pb.push_back(y = parent[y]);
        }
        // cycle nodes: a .. lca .. b, closed by the non-tree link b-a
        std::vector<std::size_t> nodes(pa.begin(), pa.end());
        nodes.insert(nodes.end(), pb.rbegin() + 1, pb.rend());
        if (nodes[0] >= K.vertex_nodes)
            std::rotate(nodes.begin(), nodes.begin() + 1, nodes.end());

        BergeCycle c;
        for (std::size_t i = 0; i < nodes.size(); i += 2) {
            c.vertices.push_back(static_cast<VertexId>(nodes[i]));
            c.edges.push_back(nodes[i + 1] - K.vertex_nodes);
        }
        basis.push_back(std::move(c));
    }
    return basis;
}

inline std::vector<BergeCycle> cycle_basis(const Hypergraph& H) {
    return cycle_basis(konig_representation(H));
}

enum class EdgeClass { pendant, branch, plain };

/// pendant: at least k-1 vertices of degree 1; branch: a vertex of degree
/// > 2 or three vertices of degree > 1; plain otherwise. The definitions
/// can overlap only for a pendant edge hanging off a high-degree vertex,
/// where the pendant label is the one the base-reduction relies on.
inline EdgeClass classify_edge(const Hypergraph& H, EdgeIndex e) {
    int pendants = 0, deep = 0, shared = 0;
    for (VertexId v : H.edge(e)) {
        int d = H.degree(v);
        if (d == 1) ++pendants;
        if (d > 1) ++shared;
        if (d > 2) ++deep;
    }
    if (pendants >= H.k() - 1) return EdgeClass::pendant;
    if (deep > 0 || shared >= 3) return EdgeClass::branch;
    return EdgeClass::plain;
}

inline EdgeClass classify_edge(const Hypergraph& H, const Edge& e) {
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    return classify_edge(H, H.edge_index(sorted));
}

/// A maximal internal path: degree-2 joints w_0..w_n threaded through path
/// edges e_1..e_n between two branch-edge anchors (which coincide for a
/// path looping back to the same edge). path_edges is empty when the two
/// anchors meet directly at the single joint w_0.
struct LoosePathLocator {
    std::vector<VertexId> joints;
    std::vector<EdgeIndex> path_edges;
    EdgeIndex anchor_front = 0;
    EdgeIndex anchor_back = 0;
    bool hypo = false;  // one anchor has no vertex of degree > 2

    std::size_t length() const { return path_edges.size(); }
};

inline std::vector<LoosePathLocator> find_internal_paths(const Hypergraph& H) {
    if (!H.is_connected())
        throw std::invalid_argument("find_internal_paths: hypergraph must be connected");
    const std::size_t m = H.edge_count();
    std::vector<bool> is_branch(m, false);
    for (EdgeIndex e = 0; e < m; ++e)
        is_branch[e] = classify_edge(H, e) == EdgeClass::branch;

    auto shallow = [&](EdgeIndex e) {
        for (VertexId v : H.edge(e))
            if (H.degree(v) > 2) return false;
        return true;
    };

    std::vector<LoosePathLocator> out;
    for (EdgeIndex b = 0; b < m; ++b) {
        if (!is_branch[b]) continue;
        for (VertexId w : H.edge(b)) {
            if (H.degree(w) != 2) continue;
            LoosePathLocator loc;
            loc.anchor_front = b;
            loc.joints.push_back(w);
            VertexId cur = w;
            EdgeIndex prev = b;
            bool internal = true;
            while (true) {
                const auto& inc = H.incident_edges(cur);
                EdgeIndex next = inc[0] == prev ? inc[1] : inc[0];
                if (is_branch[next]) {
                    loc.anchor_back = next;
                    break;
                }
                // a non-branch edge carries the path onward through its one
                // other degree-2 vertex; a pendant tail has none
                VertexId next_joint = kNoVertex;
                for (VertexId u : H.edge(next))
                    if (u != cur && H.degree(u) == 2) {
                        next_joint = u;
                        break;
                    }
                if (next_joint == kNoVertex) {
                    internal = false;
                    break;
                }
                loc.path_edges.push_back(next);
                loc.joints.push_back(next_joint);
                cur = next_joint;
                prev = next;
            }
            if (!internal) continue;
            // each path is met once from either end; keep one orientation
            if (std::make_pair(loc.anchor_front, loc.joints.front()) >
                std::make_pair(loc.anchor_back, loc.joints.back()))
                continue;
            loc.hypo = shallow(loc.anchor_front) || shallow(loc.anchor_back);
            out.push_back(std::move(loc));
        }
    }
    return out;
}

/// True iff `embedding` (a vertex map from H1 ids to H2 ids) sends every
/// edge of H1 onto an edge of H2.
inline bool is_subhypergraph(const Hypergraph& H1, const Hypergraph& H2,
                             const std::vector<VertexId>& embedding) {
    if (embedding.size() != H1.vertex_count())
        throw std::invalid_argument("is_subhypergraph: embedding size differs from H1.n");
    std::vector<bool> hit(H2.vertex_count(), false);
    for (VertexId img : embedding) {
        if (img >= H2.vertex_count())
            throw std::invalid_argument("is_subhypergraph: embedding target out of range");
        if (hit[img])
            throw std::invalid_argument("is_subhypergraph: embedding not injective");
        hit[img] = true;
    }
    if (H1.k() != H2.k()) return false;
    Edge mapped;
    for (const Edge& e : H1.edges()) {
        mapped.clear();
        for (VertexId v : e) mapped.push_back(embedding[v]);
        std::sort(mapped.begin(), mapped.end());
        if (!H2.has_edge(mapped)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text format: first line "k n m", then m lines of k space-separated
// 0-based vertex ids. Trailing whitespace is ignored.
// ---------------------------------------------------------------------------

inline Hypergraph read_hypergraph(std::istream& in) {
    auto fail = [](std::size_t line, const std::string& what) {
        throw std::invalid_argument("hypergraph text line " + std::to_string(line) + ": " + what);
    };
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        if (required) fail(lineno + 1, "unexpected end of input");
        return false;
    };

    next_line(true);
    long k = 0, n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> k >> n >> m) || (hs >> extra))
            fail(lineno, "header must be exactly 'k n m'");
        if (k < 3 || n < 1 || m < 1) fail(lineno, "header values out of range");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        next_line(true);
        std::istringstream es(line);
        Edge e;
        long v = 0;
        while (es >> v) {
            if (v < 0 || v >= n) fail(lineno, "vertex id out of range");
            e.push_back(static_cast<VertexId>(v));
        }
        if (!es.eof()) fail(lineno, "not a vertex id");
        if (e.size() != static_cast<std::size_t>(k)) fail(lineno, "edge arity differs from k");
        edges.push_back(std::move(e));
    }
    if (next_line(false)) fail(lineno, "trailing content after last edge");
    try {
        return Hypergraph(static_cast<int>(k), static_cast<VertexId>(n), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::invalid_argument(std::string("hypergraph text: ") + ex.what());
    }
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& H) {
    out << H.k() << ' ' << H.vertex_count() << ' ' << H.edge_count() << '\n';
    for (const Edge& e : H.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

}  // namespace hgspec
