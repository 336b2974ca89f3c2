#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tmdd {

struct Edge {
    int u;
    int v;
    bool operator==(const Edge&) const = default;
};

/// Simple undirected graph with a fixed edge order. The edge order is part
/// of the value: it drives the frontier schedule and the DD variable order.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int i) const { return edges_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const;
    std::vector<int> degrees() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Per-edge frontier schedule. frontiers[i] is F_{i+1} in 1-based terms:
/// the vertices incident to an edge before index i and an edge at or after
/// index i. frontiers.front() and frontiers.back() are empty.
struct FrontierSchedule {
    std::vector<std::vector<int>> frontiers;  // size m+1, each sorted
    std::vector<std::vector<int>> entering;   // per edge index, vertices first touched there
    std::vector<std::vector<int>> leaving;    // per edge index, vertices last touched there
    int width = 0;
};

enum class ReorderStrategy { AsGiven, Bfs };

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph parse_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

Graph complete_graph(int a);
Graph complete_bipartite_graph(int a, int b);
Graph king_graph(int rows, int cols);
/// K_4 minus one edge (the "diamond"): vertices {0,1,2,3},
/// edges 01, 02, 03, 21, 23.
Graph diamond_graph();

FrontierSchedule compute_frontiers(const Graph& g);
Graph reorder_edges(const Graph& g, ReorderStrategy strategy);

}  // namespace tmdd
