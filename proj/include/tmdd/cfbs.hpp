#pragma once

#include "tmdd/graph.hpp"
#include "tmdd/mdd.hpp"
#include "tmdd/profiles.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tmdd {

/// Dynamic-programming state attached to a DD node during colorful
/// frontier-based search. Vectors are aligned with the sorted frontier of
/// the node's level; comp ids use -1 for vertices a color does not track.
struct Configuration {
    std::vector<std::uint8_t> deg;      // |F| * c colored degrees, frontier order
    std::vector<std::uint8_t> dn;       // per s-entry count of retired vertices
    std::vector<std::int8_t> comp;      // |F| * c component ids, -1 = untracked
    std::uint32_t done = 0;             // bitmask per color
};

/// Serialized state used for node merging. Equal configurations (up to
/// renaming of component blocks within each color) map to equal keys.
std::string canonical_key(const Configuration& cfg, int c, int frontier_size);

struct ConstructOptions {
    bool merge_nodes = true;  // disable to build the unreduced search tree
};

/// Builds the (c+1)-DD of all c-colored subsets of E(g) whose colored
/// degree multiset is s plus an arbitrary multiset over t and whose color
/// classes are each connected. An unsatisfiable constraint yields the
/// bottom-rooted diagram.
Mdd construct(const Graph& g, const DegreeConstraint& con, ConstructOptions opts = {});

/// Single-step transition for one (configuration, edge, branch) triple,
/// exposed for tests. Outcome is a configuration over the next frontier,
/// or a terminal.
enum class StepTerminal { None, Top, Bottom };
struct StepResult {
    StepTerminal terminal = StepTerminal::Bottom;
    Configuration config;  // valid when terminal == None
};
class CfbsContext;  // per-(graph, constraint) precomputation
std::shared_ptr<CfbsContext> make_cfbs_context(const Graph& g, const DegreeConstraint& con);
StepResult child_step(const CfbsContext& ctx, const Configuration& cfg, int edge_index,
                      int branch);
Configuration root_configuration(const CfbsContext& ctx);

}  // namespace tmdd
