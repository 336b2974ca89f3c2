#pragma once

#include "tmdd/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tmdd {

/// A c-tuple of per-color degree counts.
struct ColoredDegree {
    std::vector<std::uint8_t> counts;

    bool operator==(const ColoredDegree&) const = default;
    auto operator<=>(const ColoredDegree&) const = default;
    bool dominated_by(const ColoredDegree& other) const;
    bool is_zero() const;
};

/// The constraint C_s^t: the colored degree multiset of an accepted
/// colored subgraph equals s plus an arbitrary multiset over t, and every
/// color class induces a connected subgraph.
struct DegreeConstraint {
    int c = 0;
    std::vector<std::pair<ColoredDegree, int>> s;  // degree, multiplicity
    std::vector<ColoredDegree> t;

    void validate() const;
};

struct ExtendedProfile {
    DegreeConstraint constraint;
    std::string query_name;
};

/// The degree set of subdividing vertices: one component 2, the rest 0.
std::vector<ColoredDegree> delta_set(int c);

/// Minimum vertex cover by exhaustive search, lexicographically smallest
/// among the minimum-cardinality covers. Intended for small query graphs.
std::vector<int> min_vertex_cover(const Graph& h);

ExtendedProfile edge_profile(const Graph& h);
ExtendedProfile vertex_cover_profile(const Graph& h);
ExtendedProfile complete_profile(int a);
ExtendedProfile complete_bipartite_profile(int a, int b);
ExtendedProfile diamond_profile();

}  // namespace tmdd
