#include "tmdd/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tmdd {

namespace {

std::pair<int, int> normalized(const Edge& e) {
    return {std::min(e.u, e.v), std::max(e.u, e.v)};
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (!seen.insert(normalized(e)).second)
            throw std::invalid_argument("duplicate edge");
    }
}

int Graph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) ++d;
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const Edge& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

Graph parse_edge_list(std::istream& in) {
    struct Line {
        long a, b;
        int number;
    };
    std::vector<Line> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = raw;
        if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
        std::istringstream ls(s);
        long a, b;
        if (!(ls >> a)) continue;  // blank or comment-only line
        std::string trailing;
        if (!(ls >> b) || (ls >> trailing)) {
            throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                     ": expected two integers");
        }
        lines.push_back({a, b, lineno});
    }

    // An optional leading "n m" header: recognized when the second number
    // matches the count of remaining lines and no edge endpoint exceeds n.
    std::size_t first_edge = 0;
    long header_n = 0;
    if (!lines.empty() && lines[0].b == static_cast<long>(lines.size()) - 1 &&
        lines[0].a >= 1) {
        bool ok = true;
        for (std::size_t i = 1; i < lines.size(); ++i)
            if (lines[i].a > lines[0].a || lines[i].b > lines[0].a) ok = false;
        if (ok) {
            header_n = lines[0].a;
            first_edge = 1;
        }
    }

    long max_id = header_n;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = first_edge; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.a < 1 || ln.b < 1)
            throw std::runtime_error("parse error at line " + std::to_string(ln.number) +
                                     ": vertex ids are 1-based positive integers");
        if (ln.a == ln.b)
            throw std::runtime_error("parse error at line " + std::to_string(ln.number) +
                                     ": self-loop");
        Edge e{static_cast<int>(ln.a - 1), static_cast<int>(ln.b - 1)};
        if (!seen.insert(normalized(e)).second)
            throw std::runtime_error("parse error at line " + std::to_string(ln.number) +
                                     ": duplicate edge");
        max_id = std::max({max_id, ln.a, ln.b});
        edges.push_back(e);
    }
    return Graph(static_cast<int>(max_id), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Graph complete_graph(int a) {
    if (a < 1) throw std::invalid_argument("complete_graph: a must be positive");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < a; ++v) edges.push_back({u, v});
    return Graph(a, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete_bipartite_graph: parts must be positive");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, std::move(edges));
}

Graph king_graph(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("king_graph: dimensions must be positive");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<Edge> edges;
    // Column-major sweep: verticals within a column, then every edge into
    // the next column. Keeps the frontier within two grid columns.
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r + 1 < rows; ++r) edges.push_back({id(r, c), id(r + 1, c)});
        if (c + 1 == cols) continue;
        for (int r = 0; r < rows; ++r) {
            edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c + 1)});
            if (r - 1 >= 0) edges.push_back({id(r, c), id(r - 1, c + 1)});
        }
    }
    return Graph(rows * cols, std::move(edges));
}

Graph diamond_graph() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {2, 1}, {2, 3}});
}

FrontierSchedule compute_frontiers(const Graph& g) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    std::vector<int> first(n, m), last(n, -1);
    for (int i = 0; i < m; ++i) {
        for (int v : {g.edge(i).u, g.edge(i).v}) {
            first[v] = std::min(first[v], i);
            last[v] = std::max(last[v], i);
        }
    }
    FrontierSchedule fs;
    fs.frontiers.assign(m + 1, {});
    fs.entering.assign(m, {});
    fs.leaving.assign(m, {});
    for (int v = 0; v < n; ++v) {
        if (last[v] < 0) continue;
        fs.entering[first[v]].push_back(v);
        fs.leaving[last[v]].push_back(v);
        // v is in F_{i+1} (0-based index i) when first[v] < i <= last[v].
        for (int i = first[v] + 1; i <= last[v]; ++i) fs.frontiers[i].push_back(v);
    }
    for (auto& f : fs.frontiers) std::sort(f.begin(), f.end());
    for (auto& f : fs.entering) std::sort(f.begin(), f.end());
    for (auto& f : fs.leaving) std::sort(f.begin(), f.end());
    for (const auto& f : fs.frontiers)
        fs.width = std::max(fs.width, static_cast<int>(f.size()));
    return fs;
}

Graph reorder_edges(const Graph& g, ReorderStrategy strategy) {
    if (strategy == ReorderStrategy::AsGiven) return g;
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge index)
    for (int i = 0; i < g.edge_count(); ++i) {
        adj[g.edge(i).u].push_back({g.edge(i).v, i});
        adj[g.edge(i).v].push_back({g.edge(i).u, i});
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<bool> vertex_seen(n, false), edge_seen(g.edge_count(), false);
    std::vector<Edge> edges;
    for (int s = 0; s < n; ++s) {
        if (vertex_seen[s]) continue;
        vertex_seen[s] = true;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, i] : adj[u]) {
                if (!edge_seen[i]) {
                    edge_seen[i] = true;
                    edges.push_back(g.edge(i));
                }
                if (!vertex_seen[v]) {
                    vertex_seen[v] = true;
                    q.push(v);
                }
            }
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace tmdd
