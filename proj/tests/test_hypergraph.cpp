#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "hgspec/families.hpp"
#include "hgspec/hypergraph.hpp"

using namespace hgspec;

namespace {

// Every listed edge must join consecutive cycle vertices, with no repeats.
void require_valid_berge_cycle(const Hypergraph& H, const BergeCycle& c) {
    REQUIRE(c.vertices.size() == c.edges.size());
    REQUIRE(c.vertices.size() >= 2);
    std::set<VertexId> vs(c.vertices.begin(), c.vertices.end());
    std::set<EdgeIndex> es(c.edges.begin(), c.edges.end());
    REQUIRE(vs.size() == c.vertices.size());
    REQUIRE(es.size() == c.edges.size());
    const std::size_t M = c.vertices.size();
    for (std::size_t i = 0; i < M; ++i) {
        const Edge& e = H.edge(c.edges[i]);
        REQUIRE(std::binary_search(e.begin(), e.end(), c.vertices[i]));
        REQUIRE(std::binary_search(e.begin(), e.end(), c.vertices[(i + 1) % M]));
    }
}

}  // namespace

TEST_CASE("construction validates its input") {
    REQUIRE_THROWS_AS(Hypergraph(2, 3, {{0, 1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Hypergraph(3, 3, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(Hypergraph(3, 4, {{0, 1, 2, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Hypergraph(3, 3, {{0, 1, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Hypergraph(3, 3, {{0, 1, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Hypergraph(3, 3, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
    // vertex 3 lies in no edge
    REQUIRE_THROWS_AS(Hypergraph(3, 4, {{0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("edges are sorted and order-insensitive") {
    Hypergraph a(3, 5, {{4, 3, 1}, {2, 1, 0}});
    Hypergraph b(3, 5, {{0, 1, 2}, {1, 3, 4}});
    REQUIRE(a == b);
    REQUIRE(a.edges() == std::vector<Edge>{{0, 1, 2}, {1, 3, 4}});
    REQUIRE(a.edge(0) == Edge{0, 1, 2});
    REQUIRE(a != Hypergraph(3, 5, {{0, 1, 2}, {2, 3, 4}}));
}

TEST_CASE("degrees and incidence lists") {
    Hypergraph H(3, 5, {{0, 1, 2}, {0, 3, 4}});
    REQUIRE(H.k() == 3);
    REQUIRE(H.vertex_count() == 5);
    REQUIRE(H.edge_count() == 2);
    REQUIRE(H.degree(0) == 2);
    REQUIRE(H.degree(1) == 1);
    REQUIRE(H.degrees() == std::vector<int>{2, 1, 1, 1, 1});
    REQUIRE(H.incident_edges(0) == std::vector<EdgeIndex>{0, 1});
    REQUIRE(H.incident_edges(3) == std::vector<EdgeIndex>{1});
    REQUIRE_THROWS_AS(H.degree(5), std::invalid_argument);
    REQUIRE_THROWS_AS(H.incident_edges(99), std::invalid_argument);
}

TEST_CASE("edge lookup by vertex set") {
    Hypergraph H(3, 5, {{0, 1, 2}, {0, 3, 4}});
    REQUIRE(H.has_edge({0, 1, 2}));
    REQUIRE_FALSE(H.has_edge({1, 2, 3}));
    REQUIRE(H.edge_index({0, 3, 4}) == 1);
    REQUIRE_THROWS_WITH(H.edge_index({1, 2, 3}),
                        Catch::Matchers::ContainsSubstring("edge not present"));
}

TEST_CASE("connectivity and component counting") {
    Hypergraph connected(3, 5, {{0, 1, 2}, {2, 3, 4}});
    REQUIRE(connected.is_connected());
    REQUIRE(connected.component_count() == 1);

    Hypergraph split(3, 6, {{0, 1, 2}, {3, 4, 5}});
    REQUIRE_FALSE(split.is_connected());
    REQUIRE(split.component_count() == 2);
}

TEST_CASE("cyclomatic number m(k-1) - n + p") {
    REQUIRE(build(FamilySpec::loose_path(2), 3).cyclomatic_number() == 0);
    REQUIRE(build(FamilySpec::loose_cycle(3), 3).cyclomatic_number() == 1);
    REQUIRE(build(FamilySpec::cycle_star(3), 4).cyclomatic_number() == 1);
    REQUIRE(build(FamilySpec::c1(1, 1, 1), 3).cyclomatic_number() == 2);
    REQUIRE(build(FamilySpec::c2(2, 1, 1), 4).cyclomatic_number() == 2);
    REQUIRE(build(FamilySpec::c3(2, 2), 5).cyclomatic_number() == 2);
    // acyclic two-component graph: 2*2 - 6 + 2
    REQUIRE(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}).cyclomatic_number() == 0);
}

TEST_CASE("incidence bipartite graph mirrors the hypergraph") {
    Hypergraph H = build(FamilySpec::loose_cycle(3), 4);
    KonigGraph K = konig_representation(H);
    REQUIRE(K.vertex_nodes == H.vertex_count());
    REQUIRE(K.edge_nodes == H.edge_count());
    REQUIRE(K.links.size() == H.edge_count() * H.k());
    REQUIRE(K.node_count() == H.vertex_count() + H.edge_count());
    REQUIRE(konig_cycle_rank(K) == H.cyclomatic_number());

    Hypergraph two(3, 6, {{0, 1, 2}, {3, 4, 5}});
    REQUIRE(konig_cycle_rank(konig_representation(two)) == two.cyclomatic_number());
}

TEST_CASE("fundamental cycle basis") {
    SECTION("loose cycles carry exactly one basis cycle through all edges") {
        Hypergraph H = build(FamilySpec::loose_cycle(4), 3);
        std::vector<BergeCycle> basis = cycle_basis(H);
        REQUIRE(basis.size() == 1);
        require_valid_berge_cycle(H, basis[0]);
        REQUIRE(basis[0].edges.size() == 4);
    }
    SECTION("bicyclic graphs carry two") {
        Hypergraph H = build(FamilySpec::c1(2, 1, 1), 3);
        std::vector<BergeCycle> basis = cycle_basis(H);
        REQUIRE(basis.size() == 2);
        for (const BergeCycle& c : basis) require_valid_berge_cycle(H, c);
    }
    SECTION("basis size equals the cycle rank") {
        for (const FamilySpec& spec :
             {FamilySpec::loose_path(3), FamilySpec::cycle_star(2), FamilySpec::c2(2, 2, 1)}) {
            Hypergraph H = build(spec, 3);
            REQUIRE(cycle_basis(H).size() ==
                    static_cast<std::size_t>(H.cyclomatic_number()));
        }
    }
}

TEST_CASE("edge classification") {
    SECTION("path ends are pendant, middles plain") {
        Hypergraph H = build(FamilySpec::loose_path(3), 3);
        // edges: {0,1,4}, {1,2,5}, {2,3,6}
        REQUIRE(classify_edge(H, H.edge_index({0, 1, 4})) == EdgeClass::pendant);
        REQUIRE(classify_edge(H, H.edge_index({1, 2, 5})) == EdgeClass::plain);
        REQUIRE(classify_edge(H, H.edge_index({2, 3, 6})) == EdgeClass::pendant);
    }
    SECTION("three shared vertices make a branch edge") {
        Hypergraph H = build(FamilySpec::c1(1, 1, 1), 3);
        REQUIRE(classify_edge(H, Edge{2, 0, 1}) == EdgeClass::branch);  // unsorted lookup
        REQUIRE(classify_edge(H, H.edge_index({0, 2, 6})) == EdgeClass::plain);
    }
    SECTION("a pendant edge at a high-degree vertex stays pendant") {
        Hypergraph H = build(FamilySpec::cycle_pendant_joint(2), 3);
        // pendant edge {0,4,5} hangs at vertex 0 of degree 3
        REQUIRE(H.degree(0) == 3);
        REQUIRE(classify_edge(H, H.edge_index({0, 4, 5})) == EdgeClass::pendant);
        REQUIRE(classify_edge(H, H.edge_index({0, 1, 2})) == EdgeClass::branch);
    }
    SECTION("loose cycles have only plain edges") {
        Hypergraph H = build(FamilySpec::loose_cycle(3), 3);
        for (EdgeIndex e = 0; e < H.edge_count(); ++e)
            REQUIRE(classify_edge(H, e) == EdgeClass::plain);
    }
}

TEST_CASE("internal path discovery") {
    SECTION("a loose path has no internal paths") {
        REQUIRE(find_internal_paths(build(FamilySpec::loose_path(5), 3)).empty());
    }
    SECTION("three parallel paths between two branch edges") {
        Hypergraph H = build(FamilySpec::c2(2, 1, 1), 3);
        std::vector<LoosePathLocator> paths = find_internal_paths(H);
        REQUIRE(paths.size() == 3);
        std::multiset<std::size_t> lengths;
        for (const LoosePathLocator& p : paths) {
            lengths.insert(p.length());
            REQUIRE(p.anchor_front != p.anchor_back);
            REQUIRE(p.joints.size() == p.length() + 1);
            REQUIRE(p.hypo);  // no anchor vertex exceeds degree 2
        }
        REQUIRE(lengths == std::multiset<std::size_t>{1, 1, 2});
    }
    SECTION("paths looping back to one branch edge") {
        Hypergraph H = build(FamilySpec::c3(2, 2), 4);
        std::vector<LoosePathLocator> paths = find_internal_paths(H);
        REQUIRE(paths.size() == 2);
        for (const LoosePathLocator& p : paths) {
            REQUIRE(p.length() == 2);
            REQUIRE(p.anchor_front == p.anchor_back);
        }
    }
    SECTION("anchors meeting at a single joint give an empty edge list") {
        Hypergraph H = build(FamilySpec::cycle_pendant_joint(2), 3);
        std::vector<LoosePathLocator> paths = find_internal_paths(H);
        REQUIRE(paths.size() == 1);
        REQUIRE(paths[0].length() == 0);
        REQUIRE(paths[0].joints == std::vector<VertexId>{1});
        REQUIRE_FALSE(paths[0].hypo);  // both anchors contain the degree-3 joint
    }
    SECTION("requires a connected hypergraph") {
        Hypergraph two(3, 6, {{0, 1, 2}, {3, 4, 5}});
        REQUIRE_THROWS_AS(find_internal_paths(two), std::invalid_argument);
    }
}

TEST_CASE("relabeling") {
    Hypergraph H(3, 5, {{0, 1, 2}, {2, 3, 4}});
    SECTION("permutes edges consistently") {
        Hypergraph R = H.relabeled({4, 3, 2, 1, 0});
        REQUIRE(R == Hypergraph(3, 5, {{2, 3, 4}, {0, 1, 2}}));
        REQUIRE(R.degree(2) == 2);
    }
    SECTION("identity is a no-op") { REQUIRE(H.relabeled({0, 1, 2, 3, 4}) == H); }
    SECTION("rejects malformed permutations") {
        REQUIRE_THROWS_AS(H.relabeled({0, 1, 2}), std::invalid_argument);
        REQUIRE_THROWS_AS(H.relabeled({0, 0, 1, 2, 3}), std::invalid_argument);
        REQUIRE_THROWS_AS(H.relabeled({0, 1, 2, 3, 7}), std::invalid_argument);
    }
}

TEST_CASE("subgraph embedding check") {
    Hypergraph p2 = build(FamilySpec::loose_path(2), 3);  // {0,1,3},{1,2,4}
    Hypergraph p3 = build(FamilySpec::loose_path(3), 3);  // {0,1,4},{1,2,5},{2,3,6}
    SECTION("a correct embedding is accepted") {
        REQUIRE(is_subhypergraph(p2, p3, {0, 1, 2, 4, 5}));
    }
    SECTION("a wrong image is rejected") {
        REQUIRE_FALSE(is_subhypergraph(p2, p3, {0, 1, 2, 4, 6}));
    }
    SECTION("uniformity must match") {
        Hypergraph p2k4 = build(FamilySpec::loose_path(2), 4);
        REQUIRE_FALSE(is_subhypergraph(p2, p2k4, {0, 1, 2, 3, 4}));
    }
    SECTION("malformed embeddings throw") {
        REQUIRE_THROWS_AS(is_subhypergraph(p2, p3, {0, 1, 2}), std::invalid_argument);
        REQUIRE_THROWS_AS(is_subhypergraph(p2, p3, {0, 0, 2, 4, 5}), std::invalid_argument);
        REQUIRE_THROWS_AS(is_subhypergraph(p2, p3, {0, 1, 2, 4, 99}), std::invalid_argument);
    }
}

TEST_CASE("text round trip") {
    Hypergraph H = build(FamilySpec::c1(2, 1, 1), 4);
    std::ostringstream out;
    write_hypergraph(out, H);
    std::istringstream in(out.str());
    REQUIRE(read_hypergraph(in) == H);
}

TEST_CASE("text format details") {
    SECTION("header then one line per edge") {
        std::istringstream in("3 5 2\n0 1 2\n2 3 4\n");
        Hypergraph H = read_hypergraph(in);
        REQUIRE(H.k() == 3);
        REQUIRE(H.vertex_count() == 5);
        REQUIRE(H.edges() == std::vector<Edge>{{0, 1, 2}, {2, 3, 4}});
    }
    SECTION("blank lines and indentation are tolerated") {
        std::istringstream in("\n  3 5 2 \n\n0 1 2\n\n 2 3 4\n\n");
        REQUIRE(read_hypergraph(in).edge_count() == 2);
    }
    SECTION("malformed input is rejected with the line number") {
        auto reject = [](const std::string& text, const std::string& what) {
            std::istringstream in(text);
            REQUIRE_THROWS_WITH(read_hypergraph(in), Catch::Matchers::ContainsSubstring(what));
        };
        reject("3 5\n0 1 2\n", "header");
        reject("2 5 1\n0 1\n", "out of range");
        reject("3 5 2\n0 1 2\n", "unexpected end");
        reject("3 5 1\n0 1 2 3\n", "arity");
        reject("3 5 1\n0 1 9\n", "vertex id out of range");
        reject("3 5 1\n0 x 2\n", "not a vertex id");
        reject("3 5 1\n0 1 2\n3 4 0\n", "trailing content");
        reject("3 5 2\n0 1 2\n0 1 2\n", "duplicate edge");
    }
}
