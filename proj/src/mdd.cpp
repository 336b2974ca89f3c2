#include "tmdd/mdd.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tmdd {

std::string FamilyCount::decimal() const { return value.str(); }

std::string FamilyCount::scientific(int significant) const {
    if (significant < 1) significant = 1;
    if (value == 0) return "0";
    std::string digits = value.str();
    int exponent = static_cast<int>(digits.size()) - 1;
    std::string mantissa;
    if (static_cast<int>(digits.size()) <= significant) {
        mantissa = digits + std::string(significant - digits.size(), '0');
    } else {
        mantissa = digits.substr(0, significant);
        if (digits[significant] >= '5') {
            // round half up, with carry
            int i = significant - 1;
            while (i >= 0 && mantissa[i] == '9') mantissa[i--] = '0';
            if (i < 0) {
                mantissa.insert(mantissa.begin(), '1');
                mantissa.pop_back();
                ++exponent;
            } else {
                ++mantissa[i];
            }
        }
    }
    std::string out;
    out += mantissa[0];
    if (mantissa.size() > 1) {
        out += '.';
        out += mantissa.substr(1);
    }
    out += 'e';
    out += std::to_string(exponent);
    return out;
}

std::size_t MddStore::KeyHash::operator()(const std::vector<NodeRef>& k) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (NodeRef r : k) {
        h ^= r;
        h *= 0x100000001b3ull;
    }
    return h;
}

MddStore::MddStore(int arity, int ground_set_size) : arity_(arity), m_(ground_set_size) {
    if (arity_ < 2) throw std::invalid_argument("MddStore: arity must be at least 2");
    if (m_ < 0) throw std::invalid_argument("MddStore: negative ground set");
    labels_.push_back(m_ + 1);  // bottom
    labels_.push_back(m_ + 1);  // top
}

NodeRef MddStore::make_node(int label, std::span<const NodeRef> children) {
    if (label < 1 || label > m_)
        throw std::invalid_argument("make_node: label out of range");
    if (static_cast<int>(children.size()) != arity_)
        throw std::invalid_argument("make_node: wrong child count");
    bool all_bottom = true;
    for (NodeRef c : children) {
        if (c != kBottom) all_bottom = false;
        if (c >= labels_.size()) throw std::invalid_argument("make_node: bad child ref");
        if (!is_terminal(c) && labels_[c] != label + 1)
            throw std::invalid_argument("make_node: child label must be label+1 or terminal");
    }
    if (all_bottom) return kBottom;

    std::vector<NodeRef> key;
    key.reserve(children.size() + 1);
    key.push_back(static_cast<NodeRef>(label));
    key.insert(key.end(), children.begin(), children.end());
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;

    NodeRef r = static_cast<NodeRef>(labels_.size());
    labels_.push_back(label);
    children_.insert(children_.end(), children.begin(), children.end());
    unique_.emplace(std::move(key), r);
    return r;
}

NodeRef MddStore::make_node(int label, std::initializer_list<NodeRef> children) {
    return make_node(label, std::span<const NodeRef>(children.begin(), children.size()));
}

int MddStore::label(NodeRef r) const { return labels_[r]; }

NodeRef MddStore::child(NodeRef r, int j) const {
    return children_[(static_cast<std::size_t>(r) - 2) * arity_ + j];
}

FamilyCount count_members(const Mdd& d) {
    const MddStore& st = *d.store;
    std::unordered_map<NodeRef, boost::multiprecision::cpp_int> memo;
    memo[MddStore::kBottom] = 0;
    memo[MddStore::kTop] = 1;
    // iterative post-order to keep the stack flat on deep DDs
    std::vector<NodeRef> stack{d.root};
    while (!stack.empty()) {
        NodeRef r = stack.back();
        if (memo.count(r)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (int j = 0; j < st.arity(); ++j) {
            NodeRef c = st.child(r, j);
            if (!memo.count(c)) {
                stack.push_back(c);
                ready = false;
            }
        }
        if (!ready) continue;
        boost::multiprecision::cpp_int sum = 0;
        for (int j = 0; j < st.arity(); ++j) sum += memo[st.child(r, j)];
        memo[r] = std::move(sum);
        stack.pop_back();
    }
    return {memo[d.root]};
}

namespace {

void enumerate_rec(const MddStore& st, NodeRef r, ColoredSubset& current,
                   std::vector<ColoredSubset>& out, std::uint64_t limit) {
    if (out.size() >= limit || r == MddStore::kBottom) return;
    if (r == MddStore::kTop) {
        out.push_back(current);
        return;
    }
    int element = st.label(r) - 1;
    for (int j = 0; j < st.arity() && out.size() < limit; ++j) {
        if (j > 0) current[j - 1].push_back(element);
        enumerate_rec(st, st.child(r, j), current, out, limit);
        if (j > 0) current[j - 1].pop_back();
    }
}

}  // namespace

std::vector<ColoredSubset> enumerate_members(const Mdd& d, std::uint64_t limit) {
    std::vector<ColoredSubset> out;
    ColoredSubset current(d.arity() - 1);
    enumerate_rec(*d.store, d.root, current, out, limit);
    return out;
}

bool contains(const Mdd& d, const ColoredSubset& x) {
    const MddStore& st = *d.store;
    const int m = st.ground_set_size();
    if (static_cast<int>(x.size()) != st.arity() - 1)
        throw std::invalid_argument("contains: wrong number of color classes");
    std::vector<int> color(m, 0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (int e : x[j]) {
            if (e < 0 || e >= m) throw std::invalid_argument("contains: element out of range");
            if (color[e] != 0) throw std::invalid_argument("contains: color classes overlap");
            color[e] = static_cast<int>(j) + 1;
        }
    }
    NodeRef cur = d.root;
    for (int i = 0; i < m; ++i) {
        if (cur == MddStore::kBottom) return false;
        if (cur == MddStore::kTop) {
            for (int k = i; k < m; ++k)
                if (color[k] != 0) return false;
            return true;
        }
        cur = st.child(cur, color[i]);
    }
    return cur == MddStore::kTop;
}

namespace {

std::vector<NodeRef> reachable(const Mdd& d) {
    const MddStore& st = *d.store;
    std::vector<NodeRef> order;
    std::unordered_map<NodeRef, bool> seen;
    std::vector<NodeRef> stack{d.root};
    while (!stack.empty()) {
        NodeRef r = stack.back();
        stack.pop_back();
        if (seen[r]) continue;
        seen[r] = true;
        order.push_back(r);
        if (!st.is_terminal(r))
            for (int j = st.arity() - 1; j >= 0; --j) stack.push_back(st.child(r, j));
    }
    return order;
}

}  // namespace

std::vector<std::size_t> level_node_counts(const Mdd& d) {
    std::vector<std::size_t> counts(d.ground_set_size() + 1, 0);
    for (NodeRef r : reachable(d))
        if (!d.store->is_terminal(r)) ++counts[d.store->label(r)];
    return counts;
}

int width(const Mdd& d) {
    auto counts = level_node_counts(d);
    std::size_t w = 0;
    for (std::size_t c : counts) w = std::max(w, c);
    return static_cast<int>(w);
}

NodeRef rebuild_into(MddStore& store, const Mdd& d) {
    if (store.arity() != d.arity() || store.ground_set_size() != d.ground_set_size())
        throw std::invalid_argument("rebuild_into: store shape mismatch");
    const MddStore& src = *d.store;
    std::unordered_map<NodeRef, NodeRef> map;
    map[MddStore::kBottom] = store.bottom();
    map[MddStore::kTop] = store.top();
    std::vector<NodeRef> order = reachable(d);
    // children have larger labels, so translating in reverse works bottom-up
    std::sort(order.begin(), order.end(), [&src](NodeRef a, NodeRef b) {
        return src.label(a) > src.label(b);
    });
    for (NodeRef r : order) {
        if (src.is_terminal(r)) continue;
        std::vector<NodeRef> kids(src.arity());
        for (int j = 0; j < src.arity(); ++j) kids[j] = map.at(src.child(r, j));
        map[r] = store.make_node(src.label(r), kids);
    }
    return map.at(d.root);
}

void write_dd(std::ostream& out, const Mdd& d) {
    const MddStore& st = *d.store;
    out << "# mdd arity=" << st.arity() << " m=" << st.ground_set_size() << '\n';
    std::vector<NodeRef> order = reachable(d);
    std::stable_sort(order.begin(), order.end(), [&st](NodeRef a, NodeRef b) {
        return st.label(a) > st.label(b);
    });
    std::unordered_map<NodeRef, std::size_t> id;
    id[MddStore::kBottom] = 0;
    id[MddStore::kTop] = 1;
    std::size_t next = 2;
    for (NodeRef r : order)
        if (!st.is_terminal(r)) id[r] = next++;

    auto emit_terminal = [&](NodeRef t) {
        out << id[t] << ' ' << st.ground_set_size() + 1 << '\n';
    };
    if (d.store->is_terminal(d.root)) {
        // root listed last
        emit_terminal(d.root == MddStore::kTop ? MddStore::kBottom : MddStore::kTop);
        emit_terminal(d.root);
        return;
    }
    emit_terminal(MddStore::kBottom);
    emit_terminal(MddStore::kTop);
    for (NodeRef r : order) {  // deepest levels first, root last
        if (st.is_terminal(r)) continue;
        out << id[r] << ' ' << st.label(r);
        for (int j = 0; j < st.arity(); ++j) out << ' ' << id[st.child(r, j)];
        out << '\n';
    }
}

Mdd read_dd(std::istream& in) {
    std::string line;
    int arity = -1, m = -1;
    struct Row {
        std::size_t id;
        int label;
        std::vector<std::size_t> kids;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::sscanf(line.c_str(), "# mdd arity=%d m=%d", &arity, &m);
            continue;
        }
        std::istringstream ls(line);
        Row row;
        if (!(ls >> row.id >> row.label)) throw std::runtime_error("read_dd: bad line");
        std::size_t k;
        while (ls >> k) row.kids.push_back(k);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("read_dd: empty input");
    for (const Row& r : rows) {
        if (!r.kids.empty()) {
            if (arity < 0) arity = static_cast<int>(r.kids.size());
            if (m < 0) m = 0;
        }
        if (m < 0 && r.kids.empty()) m = r.label - 1;
    }
    if (arity < 0) arity = 2;
    if (m < 0) m = rows.front().label - 1;

    auto store = std::make_shared<MddStore>(arity, m);
    std::unordered_map<std::size_t, NodeRef> map;
    map[0] = store->bottom();
    map[1] = store->top();
    // rows are ordered deepest first, so children are already translated
    NodeRef root = store->bottom();
    for (const Row& r : rows) {
        if (r.id < 2) {
            root = map.at(r.id);
            continue;
        }
        std::vector<NodeRef> kids(r.kids.size());
        for (std::size_t j = 0; j < r.kids.size(); ++j) kids[j] = map.at(r.kids[j]);
        NodeRef ref = store->make_node(r.label, kids);
        map[r.id] = ref;
        root = ref;
    }
    return Mdd{store, root};
}

}  // namespace tmdd
