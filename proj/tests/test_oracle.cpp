#include "tmdd/oracle.hpp"

#include "tmdd/graph.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using namespace tmdd;

namespace {

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

Graph subdivide_edge(const Graph& g, int edge_index) {
    std::vector<Edge> edges;
    int mid = g.vertex_count();
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == edge_index) {
            edges.push_back({g.edge(i).u, mid});
            edges.push_back({mid, g.edge(i).v});
        } else {
            edges.push_back(g.edge(i));
        }
    }
    return Graph(g.vertex_count() + 1, std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace

TEST_CASE("planarity") {
    CHECK(is_planar(complete_graph(4)));
    CHECK(is_planar(diamond_graph()));
    CHECK(is_planar(complete_bipartite_graph(2, 3)));
    CHECK(is_planar(Graph(0, {})));
    CHECK(is_planar(cycle_graph(6)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite_graph(3, 3)));
    CHECK_FALSE(is_planar(complete_graph(6)));
    CHECK(is_planar(subdivide_edge(complete_graph(4), 0)));
    CHECK_FALSE(is_planar(subdivide_edge(complete_graph(5), 0)));
}

TEST_CASE("edge_subgraph") {
    Graph g = complete_graph(4);
    Graph sub = edge_subgraph(g, 0b000101);
    CHECK(sub.vertex_count() == 4);
    REQUIRE(sub.edge_count() == 2);
    CHECK(sub.edge(0) == g.edge(0));
    CHECK(sub.edge(1) == g.edge(2));
    CHECK(edge_subgraph(g, 0).edge_count() == 0);
    CHECK(edge_subgraph(g, 0b111111) == g);
}

TEST_CASE("backtrack_enumerate planar subgraphs of K5") {
    std::vector<std::uint32_t> members;
    FamilyCount n = backtrack_enumerate(
        complete_graph(5), [](const Graph& g) { return is_planar(g); }, &members);
    CHECK(n.value == 1023);
    CHECK(members.size() == 1023);
    CHECK(std::is_sorted(members.begin(), members.end()));
    CHECK(std::count(members.begin(), members.end(), 0b1111111111u) == 0);
    CHECK(members.front() == 0);
}

TEST_CASE("backtrack_enumerate with other hereditary predicates") {
    FamilyCount all = backtrack_enumerate(complete_graph(4),
                                          [](const Graph&) { return true; });
    CHECK(all.value == 64);

    FamilyCount small = backtrack_enumerate(
        complete_graph(5), [](const Graph& g) { return g.edge_count() <= 3; });
    CHECK(small.value == 1 + 10 + 45 + 120);

    FamilyCount none = backtrack_enumerate(
        complete_graph(4), [](const Graph& g) { return g.edge_count() == 0; });
    CHECK(none.value == 1);
}

TEST_CASE("is_homeomorphic positives") {
    CHECK(is_homeomorphic(cycle_graph(4), complete_graph(3)));
    CHECK(is_homeomorphic(cycle_graph(3), complete_graph(3)));
    CHECK(is_homeomorphic(cycle_graph(9), complete_graph(3)));
    CHECK(is_homeomorphic(complete_graph(4), complete_graph(4)));
    CHECK(is_homeomorphic(subdivide_edge(complete_graph(5), 3), complete_graph(5)));
    CHECK(is_homeomorphic(subdivide_edge(subdivide_edge(diamond_graph(), 0), 2),
                          diamond_graph()));
    // a path is a subdivided edge
    CHECK(is_homeomorphic(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), Graph(2, {{0, 1}})));
    // isolated vertices in f are ignored
    CHECK(is_homeomorphic(Graph(5, {{3, 4}}), Graph(2, {{0, 1}})));
}

TEST_CASE("is_homeomorphic negatives") {
    CHECK_FALSE(is_homeomorphic(complete_graph(4), diamond_graph()));
    CHECK_FALSE(is_homeomorphic(diamond_graph(), complete_graph(4)));
    CHECK_FALSE(is_homeomorphic(complete_graph(4), complete_graph(3)));
    CHECK_FALSE(is_homeomorphic(cycle_graph(4), cycle_graph(5)));
    // only the query side is subdivided
    CHECK_FALSE(is_homeomorphic(cycle_graph(3), cycle_graph(4)));
    // every edge of f must be used
    CHECK_FALSE(is_homeomorphic(complete_graph(4), cycle_graph(4)));
    CHECK_FALSE(is_homeomorphic(complete_bipartite_graph(3, 3), complete_graph(5)));
}

TEST_CASE("brute_tm_embeddings") {
    auto k4_tri = brute_tm_embeddings(complete_graph(4), complete_graph(3));
    CHECK(k4_tri.size() == 7);
    CHECK(std::is_sorted(k4_tri.begin(), k4_tri.end()));

    auto c5_tri = brute_tm_embeddings(cycle_graph(5), complete_graph(3));
    REQUIRE(c5_tri.size() == 1);
    CHECK(c5_tri[0] == 0b11111);

    CHECK(brute_tm_embeddings(complete_graph(4), complete_graph(5)).empty());
    CHECK(brute_tm_embeddings(complete_graph(5), complete_graph(5)).size() == 1);
}

TEST_CASE("brute_tm_embeddings is relabeling invariant") {
    Graph host = complete_bipartite_graph(2, 3);
    Graph perm = relabel(host, {3, 0, 4, 1, 2});
    for (const Graph& q : {complete_graph(3), cycle_graph(4)})
        CHECK(brute_tm_embeddings(host, q).size() ==
              brute_tm_embeddings(perm, q).size());
}

TEST_CASE("brute_tm_embeddings edge-count guard") {
    CHECK_THROWS_AS(brute_tm_embeddings(complete_graph(7), complete_graph(3)),
                    std::invalid_argument);
}
