#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pmc/errors.hpp"

namespace pmc {

/// Unordered vertex pair, stored canonically as (min, max).
using Edge = std::pair<int, int>;

/// Set of vertices of a fixed-size graph, one bit per vertex.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Immutable undirected simple graph. Vertices are dense 0-based integers;
/// the edge list is kept sorted canonically (u < v, lexicographic) and the
/// per-vertex adjacency is available both as a sorted neighbor list and as a
/// bit row. All operations on it are pure, so a Graph can be shared freely
/// across threads.
class Graph {
  public:
    Graph() = default;

    /// Throws InputError on self-loops, duplicate edges, or out-of-range
    /// endpoints. Edges may be given in any order and orientation.
    Graph(int n, std::vector<Edge> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return neighbor_lists_[v]; }
    const VertexSet& adj(int v) const { return adj_rows_[v]; }

    bool has_edge(int u, int v) const {
        return u >= 0 && u < n_ && v >= 0 && v < n_ && u != v && adj_rows_[u].test(v);
    }
    int degree(int v) const { return static_cast<int>(neighbor_lists_[v].size()); }
    int min_degree() const;
    int max_degree() const;

    VertexSet full_set() const;
    VertexSet empty_set() const { return VertexSet(n_); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbor_lists_;
    std::vector<VertexSet> adj_rows_;
};

/// G[s] relabeled to 0..|s|-1 together with the map back to parent labels
/// (to_parent[i] is the parent vertex of induced vertex i).
struct InducedGraph {
    Graph graph;
    std::vector<int> to_parent;
};

InducedGraph induced(const Graph& g, const VertexSet& s);

/// Graph with the same vertex set and one edge removed.
Graph remove_edge(const Graph& g, Edge e);

enum class GraphFormat { edgelist, graph6, dot };

/// Accepts either the edge-list grammar (optional '#' comment lines, header
/// "pmc <n> <m>", then m lines "<u> <v>") or a graph6 string; the format is
/// sniffed from the first non-blank line. Throws ParseError naming the
/// offending line.
Graph parse_graph(std::string_view text);

Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view text);

/// Round-trips with parse_graph for edgelist and graph6. DOT output is for
/// visualization only.
std::string serialize(const Graph& g, GraphFormat format);

} // namespace pmc
