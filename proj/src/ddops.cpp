#include "tmdd/ddops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tmdd {

namespace {

std::string set_key(int level, const std::vector<NodeRef>& set, bool flag = false) {
    std::string key;
    key.reserve(4 + set.size() * 4 + 1);
    for (int shift = 0; shift < 32; shift += 8)
        key.push_back(static_cast<char>((level >> shift) & 0xff));
    for (NodeRef r : set)
        for (int shift = 0; shift < 32; shift += 8)
            key.push_back(static_cast<char>((r >> shift) & 0xff));
    key.push_back(flag ? 1 : 0);
    return key;
}

void sort_unique(std::vector<NodeRef>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct Decolorizer {
    const MddStore& src;
    MddStore& dst;
    int m;
    std::unordered_map<std::string, NodeRef> memo;

    // state: the source nodes reachable under one decolorized prefix, plus
    // whether some source path has already reached top (all-exclude suffix)
    NodeRef run(int level, std::vector<NodeRef> set, bool has_top) {
        if (level == m + 1) return has_top ? dst.top() : dst.bottom();
        std::string key = set_key(level, set, has_top);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        std::vector<NodeRef> zero_set, one_set;
        bool zero_top = has_top, one_top = false;
        for (NodeRef r : set) {
            NodeRef c0 = src.child(r, 0);
            if (c0 == MddStore::kTop)
                zero_top = true;
            else if (c0 != MddStore::kBottom)
                zero_set.push_back(c0);
            for (int j = 1; j < src.arity(); ++j) {
                NodeRef cj = src.child(r, j);
                if (cj == MddStore::kTop)
                    one_top = true;
                else if (cj != MddStore::kBottom)
                    one_set.push_back(cj);
            }
        }
        sort_unique(zero_set);
        sort_unique(one_set);
        NodeRef r0 = run(level + 1, std::move(zero_set), zero_top);
        NodeRef r1 = run(level + 1, std::move(one_set), one_top);
        NodeRef out = dst.make_node(level, {r0, r1});
        memo.emplace(std::move(key), out);
        return out;
    }
};

struct NonSupset {
    const MddStore& src;
    MddStore& dst;
    int m;
    std::unordered_map<std::string, NodeRef> memo;

    // set holds the forbidden-family suffix nodes still constraining A
    NodeRef run(int level, std::vector<NodeRef> set) {
        if (level == m + 1) return dst.top();
        std::string key = set_key(level, set);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        std::vector<NodeRef> zero_set, one_set;
        bool zero_dead = false, one_dead = false;  // some B fully inside A
        for (NodeRef r : set) {
            NodeRef c0 = src.child(r, 0);
            if (c0 == MddStore::kTop)
                zero_dead = one_dead = true;
            else if (c0 != MddStore::kBottom) {
                zero_set.push_back(c0);
                one_set.push_back(c0);
            }
            NodeRef c1 = src.child(r, 1);
            if (c1 == MddStore::kTop)
                one_dead = true;
            else if (c1 != MddStore::kBottom)
                one_set.push_back(c1);
        }
        sort_unique(zero_set);
        sort_unique(one_set);
        NodeRef r0 = zero_dead ? dst.bottom() : run(level + 1, std::move(zero_set));
        NodeRef r1 = one_dead ? dst.bottom() : run(level + 1, std::move(one_set));
        NodeRef out = dst.make_node(level, {r0, r1});
        memo.emplace(std::move(key), out);
        return out;
    }
};

struct Union {
    MddStore& st;
    int m;
    std::unordered_map<std::uint64_t, NodeRef> memo;

    NodeRef run(NodeRef x, NodeRef y, int level) {
        if (x == MddStore::kBottom || x == y) return y;
        if (y == MddStore::kBottom) return x;
        if (x == MddStore::kTop && y == MddStore::kTop) return st.top();
        if (x > y) std::swap(x, y);
        std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | y;
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        // an early jump to top behaves like the {empty set} suffix family
        NodeRef x0 = x == MddStore::kTop ? MddStore::kTop : st.child(x, 0);
        NodeRef x1 = x == MddStore::kTop ? MddStore::kBottom : st.child(x, 1);
        NodeRef y0 = y == MddStore::kTop ? MddStore::kTop : st.child(y, 0);
        NodeRef y1 = y == MddStore::kTop ? MddStore::kBottom : st.child(y, 1);
        NodeRef out = st.make_node(level, {run(x0, y0, level + 1), run(x1, y1, level + 1)});
        memo.emplace(key, out);
        return out;
    }
};

}  // namespace

Mdd decolorize(const Mdd& d, std::shared_ptr<MddStore> out) {
    const int m = d.ground_set_size();
    if (!out) out = std::make_shared<MddStore>(2, m);
    if (out->arity() != 2 || out->ground_set_size() != m)
        throw std::invalid_argument("decolorize: output store shape mismatch");
    if (d.root == MddStore::kBottom) return Mdd{out, out->bottom()};
    if (d.root == MddStore::kTop) return Mdd{out, out->top()};
    Decolorizer dec{*d.store, *out, m, {}};
    return Mdd{out, dec.run(1, {d.root}, false)};
}

Mdd family_union(const Mdd& a, const Mdd& b, std::shared_ptr<MddStore> out) {
    if (a.ground_set_size() != b.ground_set_size())
        throw std::invalid_argument("family_union: ground set mismatch");
    if (a.arity() != 2 || b.arity() != 2)
        throw std::invalid_argument("family_union: inputs must be 2-DDs");
    if (!out) out = a.store == b.store ? a.store : nullptr;
    if (!out) out = std::make_shared<MddStore>(2, a.ground_set_size());
    if (out->arity() != 2 || out->ground_set_size() != a.ground_set_size())
        throw std::invalid_argument("family_union: output store shape mismatch");
    NodeRef ra = a.store == out ? a.root : rebuild_into(*out, a);
    NodeRef rb = b.store == out ? b.root : rebuild_into(*out, b);
    Union op{*out, a.ground_set_size(), {}};
    return Mdd{out, op.run(ra, rb, 1)};
}

Mdd nonsupset(const Mdd& z, std::shared_ptr<MddStore> out) {
    if (z.arity() != 2) throw std::invalid_argument("nonsupset: input must be a 2-DD");
    const int m = z.ground_set_size();
    if (!out) out = std::make_shared<MddStore>(2, m);
    if (out->arity() != 2 || out->ground_set_size() != m)
        throw std::invalid_argument("nonsupset: output store shape mismatch");
    if (z.root == MddStore::kTop) return Mdd{out, out->bottom()};
    NonSupset op{*z.store, *out, m, {}};
    std::vector<NodeRef> init;
    if (z.root != MddStore::kBottom) init.push_back(z.root);
    return Mdd{out, op.run(1, std::move(init))};
}

}  // namespace tmdd
