#ifndef COARSEPATH_GRAPH_HPP
#define COARSEPATH_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "coarsepath/vertex_set.hpp"

namespace coarsepath {

// Immutable simple connected undirected graph with eagerly cached hop
// distances (n BFS runs at construction).
class Graph {
public:
    // Throws NotSimple / NotConnected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return u != v && dist_[u][v] == 1; }

    int dist(int u, int v) const { return dist_[u][v]; }
    const std::vector<std::vector<int>>& distance_matrix() const { return dist_; }

    int eccentricity(int v) const;
    int diameter() const;
    int radius() const;

    std::vector<std::pair<int, int>> edges() const;

    VertexSet full_set() const;

private:
    Graph() = default;
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> dist_;
};

enum class GraphFormat { graph6, edgelist };

// Throws ParseError / NotConnected / NotSimple.
Graph load_graph(const std::string& text, GraphFormat format);
Graph decode_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);
Graph parse_edgelist(const std::string& text);

Graph power(const Graph& g, int k);          // throws InvalidK for k < 1
VertexSet disk(const Graph& g, int s, int r);

// True iff a and b are both outside `removed` and connected in G - removed.
bool connected_avoiding(const Graph& g, int a, int b, const VertexSet& removed);

// BFS distances from s in G - removed; unreachable/removed vertices get -1.
std::vector<int> bfs_avoiding(const Graph& g, int s, const VertexSet& removed);

// A shortest a-b path in G - removed (lowest-index parent tie-break), or empty
// if none exists.
std::vector<int> shortest_path_avoiding(const Graph& g, int a, int b,
                                        const VertexSet& removed);

}  // namespace coarsepath

#endif
