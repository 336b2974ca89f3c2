#include "tmdd/oracle.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace tmdd {

bool is_planar(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    if (g.vertex_count() >= 3 &&
        g.edge_count() > 3 * g.vertex_count() - 6)
        return false;  // Euler bound
    BoostGraph bg(g.vertex_count());
    for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

Graph edge_subgraph(const Graph& g, std::uint32_t mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (mask & (1u << i)) edges.push_back(g.edge(i));
    return Graph(g.vertex_count(), std::move(edges));
}

namespace {

void backtrack_rec(const Graph& g, std::vector<Edge>& chosen, std::uint32_t mask, int i,
                   const std::function<bool(const Graph&)>& predicate,
                   boost::multiprecision::cpp_int& count,
                   std::vector<std::uint32_t>* members) {
    if (i == g.edge_count()) {
        ++count;
        if (members) members->push_back(mask);
        return;
    }
    backtrack_rec(g, chosen, mask, i + 1, predicate, count, members);
    chosen.push_back(g.edge(i));
    Graph candidate(g.vertex_count(), chosen);
    if (predicate(candidate))
        backtrack_rec(g, chosen, mask | (1u << i), i + 1, predicate, count, members);
    chosen.pop_back();
}

}  // namespace

FamilyCount backtrack_enumerate(const Graph& g,
                                const std::function<bool(const Graph&)>& predicate,
                                std::vector<std::uint32_t>* members) {
    if (members && g.edge_count() > 32)
        throw std::runtime_error("backtrack_enumerate: member masks need at most 32 edges");
    boost::multiprecision::cpp_int count = 0;
    std::vector<Edge> chosen;
    backtrack_rec(g, chosen, 0, 0, predicate, count, members);
    if (members) std::sort(members->begin(), members->end());
    return {count};
}

namespace {

struct HomeoSearch {
    const Graph& f;
    const Graph& h;
    std::vector<int> f_deg;
    std::vector<std::vector<std::pair<int, int>>> f_adj;  // (neighbor, edge id)
    std::vector<int> h_order;                             // h vertices, search order
    std::vector<int> image;                               // h vertex -> f vertex
    std::vector<bool> taken;                              // f vertex used as image

    bool structural_check() const {
        std::vector<bool> branch(f.vertex_count(), false);
        for (int v : image) branch[v] = true;
        std::vector<bool> edge_used(f.edge_count(), false);
        std::multiset<std::pair<int, int>> paths;
        for (std::size_t hi = 0; hi < image.size(); ++hi) {
            int b = image[hi];
            for (auto [w, e] : f_adj[b]) {
                if (edge_used[e]) continue;
                edge_used[e] = true;
                int prev = b, cur = w;
                int prev_edge = e;
                while (!branch[cur]) {
                    if (f_deg[cur] != 2) return false;
                    int nxt = -1, nxt_edge = -1;
                    for (auto [w2, e2] : f_adj[cur])
                        if (e2 != prev_edge) {
                            nxt = w2;
                            nxt_edge = e2;
                        }
                    if (nxt_edge < 0 || edge_used[nxt_edge]) return false;
                    edge_used[nxt_edge] = true;
                    prev = cur;
                    cur = nxt;
                    prev_edge = nxt_edge;
                }
                (void)prev;
                paths.insert({std::min(b, cur), std::max(b, cur)});
            }
        }
        for (bool used : edge_used)
            if (!used) return false;
        std::multiset<std::pair<int, int>> wanted;
        for (const Edge& e : h.edges()) {
            int a = image[e.u], b = image[e.v];
            wanted.insert({std::min(a, b), std::max(a, b)});
        }
        return paths == wanted;
    }

    bool assign(std::size_t k) {
        if (k == h_order.size()) return structural_check();
        int hv = h_order[k];
        int want = h.degree(hv);
        for (int fv = 0; fv < f.vertex_count(); ++fv) {
            if (taken[fv] || f_deg[fv] != want) continue;
            taken[fv] = true;
            image[hv] = fv;
            if (assign(k + 1)) {
                taken[fv] = false;
                return true;
            }
            taken[fv] = false;
        }
        return false;
    }
};

}  // namespace

bool is_homeomorphic(const Graph& f, const Graph& h) {
    if (h.edge_count() == 0) throw std::invalid_argument("is_homeomorphic: empty query");
    for (int d : h.degrees())
        if (d == 0) throw std::invalid_argument("is_homeomorphic: isolated query vertex");

    std::vector<int> f_deg = f.degrees();
    int f_vertices = 0;
    for (int d : f_deg)
        if (d > 0) ++f_vertices;
    const int extra = f_vertices - h.vertex_count();
    if (extra < 0 || f.edge_count() != h.edge_count() + extra) return false;

    // branch vertices keep their original degree; inserted ones have degree 2
    std::multiset<int> f_nontwo, h_nontwo;
    for (int d : f_deg)
        if (d > 0 && d != 2) f_nontwo.insert(d);
    for (int d : h.degrees())
        if (d != 2) h_nontwo.insert(d);
    if (f_nontwo != h_nontwo) return false;

    HomeoSearch search{f, h, std::move(f_deg), {}, {}, {}, {}};
    search.f_adj.resize(f.vertex_count());
    for (int i = 0; i < f.edge_count(); ++i) {
        search.f_adj[f.edge(i).u].push_back({f.edge(i).v, i});
        search.f_adj[f.edge(i).v].push_back({f.edge(i).u, i});
    }
    for (int v = 0; v < h.vertex_count(); ++v) search.h_order.push_back(v);
    std::stable_sort(search.h_order.begin(), search.h_order.end(),
                     [&h](int a, int b) { return h.degree(a) > h.degree(b); });
    search.image.assign(h.vertex_count(), -1);
    search.taken.assign(f.vertex_count(), false);
    return search.assign(0);
}

std::vector<std::uint32_t> brute_tm_embeddings(const Graph& g, const Graph& h) {
    if (g.edge_count() > 20)
        throw std::invalid_argument(
            "brute_tm_embeddings: refusing hosts with more than 20 edges");
    std::vector<std::uint32_t> out;
    const std::uint32_t total = 1u << g.edge_count();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (static_cast<int>(std::popcount(mask)) < h.edge_count()) continue;
        if (is_homeomorphic(edge_subgraph(g, mask), h)) out.push_back(mask);
    }
    return out;
}

}  // namespace tmdd
