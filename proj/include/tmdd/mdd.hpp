#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace tmdd {

using NodeRef = std::uint32_t;

/// Exact nonnegative member count; planar-subgraph counts reach 10^1349
/// and beyond, so this is arbitrary precision.
struct FamilyCount {
    boost::multiprecision::cpp_int value;

    std::string decimal() const;
    /// Rounded scientific notation, e.g. "5.33e8". At least 3 significant
    /// digits; values below 1000 are printed with a plain mantissa.
    std::string scientific(int significant = 3) const;

    bool operator==(const FamilyCount&) const = default;
    auto operator<=>(const FamilyCount&) const = default;
};

/// Hash-consed arena of quasi-reduced multi-valued DD nodes. Labels step
/// by exactly one along arcs; a child may also be one of the two reserved
/// terminals. Node identity is structural: equal label and child tuple
/// means the identical NodeRef.
class MddStore {
public:
    static constexpr NodeRef kBottom = 0;
    static constexpr NodeRef kTop = 1;

    MddStore(int arity, int ground_set_size);

    int arity() const { return arity_; }
    int ground_set_size() const { return m_; }

    NodeRef bottom() const { return kBottom; }
    NodeRef top() const { return kTop; }
    bool is_terminal(NodeRef r) const { return r < 2; }

    /// Canonicalizing constructor. Children must all be terminals or carry
    /// label+1. Returns bottom when every child is bottom.
    NodeRef make_node(int label, std::span<const NodeRef> children);
    NodeRef make_node(int label, std::initializer_list<NodeRef> children);

    int label(NodeRef r) const;  // terminals report m+1
    NodeRef child(NodeRef r, int j) const;

    std::size_t node_count() const { return labels_.size(); }  // includes terminals

private:
    int arity_;
    int m_;
    std::vector<int> labels_;
    std::vector<NodeRef> children_;  // arity_ entries per non-terminal
    struct KeyHash {
        std::size_t operator()(const std::vector<NodeRef>& k) const;
    };
    std::unordered_map<std::vector<NodeRef>, NodeRef, KeyHash> unique_;
};

/// A DD root tied to its store.
struct Mdd {
    std::shared_ptr<MddStore> store;
    NodeRef root = MddStore::kBottom;

    int arity() const { return store->arity(); }
    int ground_set_size() const { return store->ground_set_size(); }
};

/// A c-colored subset: color_classes[j] lists the 0-based ground elements
/// carrying color j+1. Classes are pairwise disjoint.
using ColoredSubset = std::vector<std::vector<int>>;

FamilyCount count_members(const Mdd& d);
std::vector<ColoredSubset> enumerate_members(const Mdd& d, std::uint64_t limit);
bool contains(const Mdd& d, const ColoredSubset& x);
int width(const Mdd& d);
/// Number of stored nodes reachable from the root, per label 1..m.
std::vector<std::size_t> level_node_counts(const Mdd& d);

/// Copy a DD into another store through make_node; used to compare DDs
/// built in independent stores by root reference.
NodeRef rebuild_into(MddStore& store, const Mdd& d);

/// Text export: one line "id label child_0 ... child_c" per node, ids
/// 0=bottom and 1=top, root last. Round-trips bit-exactly.
void write_dd(std::ostream& out, const Mdd& d);
Mdd read_dd(std::istream& in);

}  // namespace tmdd
