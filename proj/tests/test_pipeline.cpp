#include "tmdd/pipeline.hpp"

#include "tmdd/oracle.hpp"

#include "doctest.h"

#include <set>
#include <vector>

using namespace tmdd;

namespace {

std::set<std::uint32_t> masks_of(const Mdd& d) {
    std::set<std::uint32_t> out;
    for (const ColoredSubset& x : enumerate_members(d, 1u << 22)) {
        std::uint32_t mask = 0;
        for (int e : x[0]) mask |= 1u << e;
        out.insert(mask);
    }
    return out;
}

FamilyCount class_count(const Graph& g, const std::string& cls) {
    return count_members(ftm_subgraphs(g, graph_class(cls)));
}

}  // namespace

TEST_CASE("named_query") {
    CHECK(named_query("k3") == complete_graph(3));
    CHECK(named_query("k4") == complete_graph(4));
    CHECK(named_query("k4e") == diamond_graph());
    CHECK(named_query("k23") == complete_bipartite_graph(2, 3));
    CHECK(named_query("k33") == complete_bipartite_graph(3, 3));
    CHECK(named_query("k5") == complete_graph(5));
    CHECK_THROWS_AS(named_query("k6?"), std::invalid_argument);
}

TEST_CASE("profile_for") {
    CHECK(profile_for(complete_graph(5), ProfileChoice::Special).constraint.c == 3);
    CHECK(profile_for(complete_graph(5), ProfileChoice::Vertex).constraint.c == 4);
    CHECK(profile_for(complete_graph(5), ProfileChoice::Edge).constraint.c == 10);
    CHECK(profile_for(complete_bipartite_graph(3, 3), ProfileChoice::Special).constraint.c == 3);
    CHECK(profile_for(diamond_graph(), ProfileChoice::Special).constraint.c == 2);
    // no specialized shape: fall back to the vertex-cover builder
    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(profile_for(path, ProfileChoice::Special).constraint.c ==
          profile_for(path, ProfileChoice::Vertex).constraint.c);
}

TEST_CASE("tm_embeddings self and impossible queries") {
    Graph k5 = named_query("k5");
    CHECK(count_members(tm_embeddings(k5, profile_for(k5, ProfileChoice::Special))).value == 1);
    Graph k33 = named_query("k33");
    CHECK(count_members(tm_embeddings(k33, profile_for(k5, ProfileChoice::Special))).value == 0);
    CHECK(count_members(tm_embeddings(k33, profile_for(k33, ProfileChoice::Special))).value == 1);
}

TEST_CASE("tm_embeddings of k5 in K6 matches the brute-force oracle") {
    Graph k6 = complete_graph(6);
    auto brute = brute_tm_embeddings(k6, named_query("k5"));
    std::set<std::uint32_t> expect(brute.begin(), brute.end());
    for (ProfileChoice choice : {ProfileChoice::Special, ProfileChoice::Vertex}) {
        Mdd d = tm_embeddings(k6, profile_for(named_query("k5"), choice));
        CHECK(masks_of(d) == expect);
    }
}

TEST_CASE("graph_class specs") {
    CHECK(graph_class("planar").forbidden.size() == 2);
    CHECK(graph_class("outerplanar").forbidden.size() == 2);
    CHECK(graph_class("series-parallel").forbidden.size() == 1);
    CHECK(graph_class("cactus").forbidden.size() == 1);
    CHECK(graph_class_names().size() == 4);
    CHECK_THROWS_AS(graph_class("chordal"), std::invalid_argument);
}

TEST_CASE("class families on small hosts") {
    Graph k3 = complete_graph(3);
    for (const std::string& cls : graph_class_names())
        CHECK(class_count(k3, cls).value == 8);

    Graph k4 = complete_graph(4);
    CHECK(class_count(k4, "planar").value == 64);
    CHECK(class_count(k4, "series-parallel").value == 63);
    CHECK(class_count(k4, "outerplanar").value == 63);
    // any five edges of K4 already contain the 4-cycle with a chord
    CHECK(class_count(k4, "cactus").value == 57);

    Graph k5 = complete_graph(5);
    CHECK(class_count(k5, "planar").value == 1023);
}

TEST_CASE("class inclusion chains") {
    for (const Graph& g : {complete_graph(5), complete_bipartite_graph(3, 3),
                           king_graph(3, 2)}) {
        auto store = std::make_shared<MddStore>(2, g.edge_count());
        auto family = [&](const std::string& cls) {
            return masks_of(ftm_subgraphs(g, graph_class(cls), store));
        };
        std::set<std::uint32_t> planar = family("planar");
        std::set<std::uint32_t> sp = family("series-parallel");
        std::set<std::uint32_t> outer = family("outerplanar");
        std::set<std::uint32_t> cactus = family("cactus");
        CHECK(std::includes(planar.begin(), planar.end(), sp.begin(), sp.end()));
        CHECK(std::includes(sp.begin(), sp.end(), outer.begin(), outer.end()));
        CHECK(std::includes(sp.begin(), sp.end(), cactus.begin(), cactus.end()));
    }
}

TEST_CASE("planar family of a planar host is the full power set") {
    Graph king = king_graph(3, 2);  // planar host, 11 edges
    CHECK(class_count(king, "planar").value == 2048);
}
