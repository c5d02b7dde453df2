#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace apexminor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph over dense ids 0..n-1.
///
/// Immutable after construction. Adjacency lists are sorted, and every edge is
/// stored once in edges() as (u, v) with u < v, in lexicographic order.
class Graph {
 public:
  Graph() = default;

  /// Strict constructor: rejects self-loops, duplicate edges and out-of-range ids.
  Graph(int vertex_count, std::span<const Edge> edges);

  /// Builds the simple closure of a multigraph: loops dropped, parallel edges merged.
  static Graph simple_closure(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Index of edge {u,v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

 private:
  void build_adjacency();

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

Graph complete_graph(int n);
Graph complete_bipartite(int left, int right);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Subgraph induced by `vertices`. The i-th listed vertex becomes vertex i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Graph with vertex `v` removed; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);

/// Adds one new vertex (id = old vertex count) adjacent to `neighbors`.
Graph add_apex(const Graph& g, std::span<const Vertex> neighbors);

/// True iff the vertices of `subset` induce a connected subgraph (false when empty).
bool induces_connected(const Graph& g, std::span<const Vertex> subset);

bool is_connected(const Graph& g);

/// Directed graph used for conflict relations; no structural invariants beyond range checks.
struct Digraph {
  int vertex_count = 0;
  std::vector<std::vector<Vertex>> out;

  explicit Digraph(int n = 0) : vertex_count(n), out(n) {}
  void add_arc(Vertex from, Vertex to);
  int out_degree(Vertex v) const { return static_cast<int>(out[v].size()); }
};

/// Coordinate-addressed grid. Coordinates are 1-based; vertex ids are row-major:
/// (x, y) -> (x - 1) * cols + (y - 1). `rows` bounds the first coordinate.
struct GridSpec {
  int rows = 0;
  int cols = 0;

  int size() const noexcept { return rows * cols; }
  bool contains(int x, int y) const noexcept { return x >= 1 && x <= rows && y >= 1 && y <= cols; }
  Vertex vertex(int x, int y) const;
  std::pair<int, int> coord(Vertex v) const;

  bool operator==(const GridSpec&) const = default;
};

/// rows x cols grid graph; throws InvalidArgument on a zero dimension.
std::pair<Graph, GridSpec> make_grid(int rows, int cols);

/// True iff g is exactly the grid graph described by spec (same ids).
bool is_grid_graph(const Graph& g, const GridSpec& spec);

}  // namespace apexminor
