#pragma once

#include "tmdd/cfbs.hpp"
#include "tmdd/ddops.hpp"
#include "tmdd/graph.hpp"
#include "tmdd/mdd.hpp"
#include "tmdd/profiles.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tmdd {

enum class ProfileChoice { Vertex, Edge, Special };

/// Named query shorthands: k3, k4, k4e, k23, k33, k5.
Graph named_query(const std::string& name);
/// Profile for a query; Special falls back to the vertex-cover builder
/// for queries without a dedicated one.
ExtendedProfile profile_for(const Graph& h, ProfileChoice choice);

/// A graph class characterized by forbidden topological minors, as a list
/// of (query, specialized profile) pairs.
struct GraphClassSpec {
    std::string name;
    std::vector<std::pair<Graph, ExtendedProfile>> forbidden;
};

/// One of: planar, outerplanar, series-parallel, cactus.
GraphClassSpec graph_class(const std::string& name);
std::vector<std::string> graph_class_names();

/// 2-DD of all edge subsets of g homeomorphic to h.
Mdd tm_embeddings(const Graph& g, const ExtendedProfile& profile,
                  std::shared_ptr<MddStore> out = nullptr);

/// 2-DD of all subgraphs of g in the class: union of the forbidden
/// TM-embedding families, then nonsupset.
Mdd ftm_subgraphs(const Graph& g, const GraphClassSpec& cls,
                  std::shared_ptr<MddStore> out = nullptr);

}  // namespace tmdd
