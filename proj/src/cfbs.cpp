#include "tmdd/cfbs.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

namespace tmdd {

class CfbsContext {
public:
    Graph graph;
    DegreeConstraint con;
    FrontierSchedule fs;
    int c = 0;
    std::uint32_t all_done = 0;

    std::vector<ColoredDegree> s_deg;
    std::vector<std::uint8_t> s_mult;
    std::vector<ColoredDegree> t_deg;
    std::vector<ColoredDegree> s_union_t;

    // per edge index: work set W = F_i ∪ {u,v} (sorted) and position maps
    struct Level {
        std::vector<int> work;        // vertex ids
        std::vector<int> from_front;  // W position -> position in F_i, or -1 (entering)
        std::vector<int> keep;        // W positions surviving into F_{i+1}, in order
        std::vector<int> depart;      // W positions leaving after this edge
        int pu = 0, pv = 0;           // endpoint positions in W
    };
    std::vector<Level> levels;
};

std::shared_ptr<CfbsContext> make_cfbs_context(const Graph& g, const DegreeConstraint& con) {
    con.validate();
    if (con.c > 31) throw std::invalid_argument("cfbs: more than 31 colors unsupported");
    auto ctx = std::make_shared<CfbsContext>();
    ctx->graph = g;
    ctx->con = con;
    ctx->fs = compute_frontiers(g);
    ctx->c = con.c;
    ctx->all_done = (con.c == 31) ? 0x7fffffffu : ((1u << con.c) - 1);
    for (const auto& [d, mult] : con.s) {
        ctx->s_deg.push_back(d);
        ctx->s_mult.push_back(static_cast<std::uint8_t>(mult));
        ctx->s_union_t.push_back(d);
    }
    for (const auto& d : con.t) {
        ctx->t_deg.push_back(d);
        if (std::find(ctx->s_deg.begin(), ctx->s_deg.end(), d) == ctx->s_deg.end())
            ctx->s_union_t.push_back(d);
    }
    const int m = g.edge_count();
    ctx->levels.resize(m);
    for (int i = 0; i < m; ++i) {
        auto& lvl = ctx->levels[i];
        lvl.work = ctx->fs.frontiers[i];
        for (int v : {g.edge(i).u, g.edge(i).v}) {
            auto it = std::lower_bound(lvl.work.begin(), lvl.work.end(), v);
            if (it == lvl.work.end() || *it != v) lvl.work.insert(it, v);
        }
        const auto& front = ctx->fs.frontiers[i];
        const auto& next = ctx->fs.frontiers[i + 1];
        for (std::size_t p = 0; p < lvl.work.size(); ++p) {
            int v = lvl.work[p];
            auto it = std::lower_bound(front.begin(), front.end(), v);
            lvl.from_front.push_back(it != front.end() && *it == v
                                         ? static_cast<int>(it - front.begin())
                                         : -1);
            if (std::binary_search(next.begin(), next.end(), v))
                lvl.keep.push_back(static_cast<int>(p));
            else
                lvl.depart.push_back(static_cast<int>(p));
            if (v == g.edge(i).u) lvl.pu = static_cast<int>(p);
            if (v == g.edge(i).v) lvl.pv = static_cast<int>(p);
        }
    }
    return ctx;
}

Configuration root_configuration(const CfbsContext& ctx) {
    Configuration cfg;
    cfg.dn.assign(ctx.s_deg.size(), 0);
    return cfg;
}

namespace {

bool dominated_by_any(const std::uint8_t* deg, int c,
                      const std::vector<ColoredDegree>& candidates) {
    for (const auto& d : candidates) {
        bool ok = true;
        for (int j = 0; j < c; ++j)
            if (deg[j] > d.counts[j]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

int find_exact(const std::uint8_t* deg, int c, const std::vector<ColoredDegree>& list) {
    for (std::size_t k = 0; k < list.size(); ++k)
        if (std::memcmp(deg, list[k].counts.data(), c) == 0) return static_cast<int>(k);
    return -1;
}

}  // namespace

StepResult child_step(const CfbsContext& ctx, const Configuration& cfg, int edge_index,
                      int branch) {
    const int c = ctx.c;
    const auto& lvl = ctx.levels[edge_index];
    const int wsz = static_cast<int>(lvl.work.size());

    // expand the configuration onto the work set; entering vertices start at zero
    std::vector<std::uint8_t> deg(static_cast<std::size_t>(wsz) * c, 0);
    std::vector<std::int8_t> comp(static_cast<std::size_t>(wsz) * c, -1);
    for (int p = 0; p < wsz; ++p) {
        int src = lvl.from_front[p];
        if (src < 0) continue;
        std::memcpy(&deg[p * c], &cfg.deg[src * c], c);
        std::memcpy(&comp[p * c], &cfg.comp[src * c], c);
    }
    std::vector<std::uint8_t> dn = cfg.dn;
    std::uint32_t done = cfg.done;

    if (branch > 0) {
        const int jj = branch - 1;
        if (done & (1u << jj)) return {};
        for (int p : {lvl.pu, lvl.pv}) {
            ++deg[p * c + jj];
            if (!dominated_by_any(&deg[p * c], c, ctx.s_union_t)) return {};
        }
        // lazy tracking: a vertex joins comp[jj] with its first edge of that color
        std::int8_t next_id = 0;
        for (int p = 0; p < wsz; ++p)
            next_id = std::max(next_id, static_cast<std::int8_t>(comp[p * c + jj] + 1));
        for (int p : {lvl.pu, lvl.pv})
            if (comp[p * c + jj] < 0) comp[p * c + jj] = next_id++;
        std::int8_t cu = comp[lvl.pu * c + jj], cv = comp[lvl.pv * c + jj];
        if (cu != cv)
            for (int p = 0; p < wsz; ++p)
                if (comp[p * c + jj] == cv) comp[p * c + jj] = cu;
    }

    // retire departing vertices into dn (or t); all-zero degrees retire silently
    for (int p : lvl.depart) {
        const std::uint8_t* d = &deg[p * c];
        bool zero = true;
        for (int j = 0; j < c; ++j)
            if (d[j]) zero = false;
        if (zero) continue;
        int si = find_exact(d, c, ctx.s_deg);
        if (si >= 0 && dn[si] < ctx.s_mult[si])
            ++dn[si];
        else if (find_exact(d, c, ctx.t_deg) < 0)
            return {};
    }

    // per-color completion: a component with no vertex surviving the edge
    // finishes its color; leftover partial components kill the branch
    for (int jj = 0; jj < c; ++jj) {
        if (done & (1u << jj)) continue;
        bool has_left = false, left_twice = false, has_surviving = false;
        std::int8_t left_id = -1;
        for (std::size_t k = 0; k < lvl.keep.size(); ++k)
            if (comp[lvl.keep[k] * c + jj] >= 0) has_surviving = true;
        for (int p : lvl.depart) {
            std::int8_t id = comp[p * c + jj];
            if (id < 0) continue;
            bool survives = false;
            for (int q : lvl.keep)
                if (comp[q * c + jj] == id) survives = true;
            if (survives) continue;
            if (has_left && id != left_id) left_twice = true;
            has_left = true;
            left_id = id;
        }
        if (left_twice) return {};
        if (has_left) {
            if (has_surviving) return {};
            done |= 1u << jj;
        }
    }
    if (done == ctx.all_done) {
        if (std::equal(dn.begin(), dn.end(), ctx.s_mult.begin(), ctx.s_mult.end()))
            return {StepTerminal::Top, {}};
        return {};
    }
    if (edge_index + 1 == ctx.graph.edge_count()) return {};

    StepResult res;
    res.terminal = StepTerminal::None;
    Configuration& out = res.config;
    out.deg.resize(lvl.keep.size() * c);
    out.comp.resize(lvl.keep.size() * c);
    for (std::size_t k = 0; k < lvl.keep.size(); ++k) {
        std::memcpy(&out.deg[k * c], &deg[lvl.keep[k] * c], c);
        std::memcpy(&out.comp[k * c], &comp[lvl.keep[k] * c], c);
    }
    for (int jj = 0; jj < c; ++jj)
        if (done & (1u << jj))
            for (std::size_t k = 0; k < lvl.keep.size(); ++k)
                out.comp[k * c + jj] = -1;
    out.dn = std::move(dn);
    out.done = done;
    return res;
}

std::string canonical_key(const Configuration& cfg, int c, int frontier_size) {
    std::string key;
    key.reserve(cfg.deg.size() + cfg.comp.size() + cfg.dn.size() + 4);
    key.append(reinterpret_cast<const char*>(cfg.deg.data()), cfg.deg.size());
    key.append(reinterpret_cast<const char*>(cfg.dn.data()), cfg.dn.size());
    for (int shift = 0; shift < 32; shift += 8)
        key.push_back(static_cast<char>((cfg.done >> shift) & 0xff));
    // rename component blocks by first occurrence within each color
    for (int jj = 0; jj < c; ++jj) {
        std::int8_t rename[128];
        std::memset(rename, -1, sizeof(rename));
        std::int8_t next = 0;
        for (int k = 0; k < frontier_size; ++k) {
            std::int8_t id = cfg.comp[k * c + jj];
            if (id < 0) {
                key.push_back(-1);
                continue;
            }
            if (rename[static_cast<int>(id)] < 0) rename[static_cast<int>(id)] = next++;
            key.push_back(static_cast<char>(rename[static_cast<int>(id)]));
        }
    }
    return key;
}

Mdd construct(const Graph& g, const DegreeConstraint& con, ConstructOptions opts) {
    auto ctx = make_cfbs_context(g, con);
    const int m = g.edge_count();
    const int c = con.c;
    auto store = std::make_shared<MddStore>(c + 1, m);
    if (m == 0)
        return Mdd{store, con.s.empty() ? store->top() : store->bottom()};

    constexpr std::int32_t kBotKid = -1;
    constexpr std::int32_t kTopKid = -2;
    std::vector<std::vector<std::int32_t>> kids_by_level(m);

    std::vector<Configuration> level{root_configuration(*ctx)};
    for (int i = 0; i < m && !level.empty(); ++i) {
        std::vector<Configuration> next_level;
        std::unordered_map<std::string, std::int32_t> table;
        auto& kids = kids_by_level[i];
        kids.reserve(level.size() * (c + 1));
        const int next_fsz = static_cast<int>(ctx->fs.frontiers[i + 1].size());
        for (const Configuration& cfg : level) {
            for (int j = 0; j <= c; ++j) {
                StepResult r = child_step(*ctx, cfg, i, j);
                if (r.terminal == StepTerminal::Bottom) {
                    kids.push_back(kBotKid);
                } else if (r.terminal == StepTerminal::Top) {
                    kids.push_back(kTopKid);
                } else if (!opts.merge_nodes) {
                    kids.push_back(static_cast<std::int32_t>(next_level.size()));
                    next_level.push_back(std::move(r.config));
                } else {
                    std::string key = canonical_key(r.config, c, next_fsz);
                    auto [it, inserted] =
                        table.emplace(std::move(key), static_cast<std::int32_t>(next_level.size()));
                    if (inserted) next_level.push_back(std::move(r.config));
                    kids.push_back(it->second);
                }
            }
        }
        level = std::move(next_level);
    }

    // canonicalize bottom-up through the store
    std::vector<NodeRef> next_refs;  // refs of level i+1 nodes
    for (int i = m - 1; i >= 0; --i) {
        const auto& kids = kids_by_level[i];
        std::vector<NodeRef> refs(kids.size() / (c + 1));
        std::vector<NodeRef> ch(c + 1);
        for (std::size_t k = 0; k < refs.size(); ++k) {
            for (int j = 0; j <= c; ++j) {
                std::int32_t kid = kids[k * (c + 1) + j];
                ch[j] = kid == kBotKid ? store->bottom()
                        : kid == kTopKid ? store->top()
                                         : next_refs[kid];
            }
            refs[k] = store->make_node(i + 1, ch);
        }
        next_refs = std::move(refs);
    }
    NodeRef root = next_refs.empty() ? store->bottom() : next_refs[0];
    return Mdd{store, root};
}

}  // namespace tmdd
