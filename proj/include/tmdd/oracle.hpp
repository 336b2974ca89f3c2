#pragma once

#include "tmdd/graph.hpp"
#include "tmdd/mdd.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace tmdd {

/// True iff g is planar. Independent of the DD pipeline.
bool is_planar(const Graph& g);

/// The subgraph of g induced by the edge subset encoded in mask (bit i =
/// edge i). Keeps g's vertex set; untouched vertices become isolated.
Graph edge_subgraph(const Graph& g, std::uint32_t mask);

/// Backtracking enumeration over edge subsets of g satisfying a
/// hereditary predicate (closed under edge deletion); prunes whole
/// subtrees as soon as the predicate fails.
FamilyCount backtrack_enumerate(const Graph& g,
                                const std::function<bool(const Graph&)>& predicate,
                                std::vector<std::uint32_t>* members = nullptr);

/// True iff f (ignoring isolated vertices) is isomorphic to a subdivision
/// of h. Only h is subdivided; every vertex and edge of f must be used.
bool is_homeomorphic(const Graph& f, const Graph& h);

/// All edge subsets of g homeomorphic to h, as bitmasks in binary-counter
/// order. Guarded to at most 20 edges.
std::vector<std::uint32_t> brute_tm_embeddings(const Graph& g, const Graph& h);

}  // namespace tmdd
