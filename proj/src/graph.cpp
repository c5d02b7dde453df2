#include "apexminor/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "apexminor/error.hpp"

namespace apexminor {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::TrialsExhausted: return "trials-exhausted";
    case ErrorKind::LimitExceeded: return "limit-exceeded";
    case ErrorKind::Defect: return "defect";
  }
  return "unknown";
}

namespace {

Edge normalized(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

Graph::Graph(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) fail(ErrorKind::InvalidArgument, "vertex-count", "negative vertex count");
  adjacency_.resize(vertex_count);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      fail(ErrorKind::InvalidArgument, "vertex-range",
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) fail(ErrorKind::InvalidArgument, "self-loop", "self-loop at vertex " + std::to_string(u));
    edges_.push_back(normalized(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    fail(ErrorKind::InvalidArgument, "duplicate-edge",
         "duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  build_adjacency();
}

Graph Graph::simple_closure(int vertex_count, std::vector<Edge> edges) {
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (auto [u, v] : edges)
    if (u != v) kept.push_back(normalized(u, v));
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return Graph(vertex_count, kept);
}

void Graph::build_adjacency() {
  std::vector<int> deg(adjacency_.size(), 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) adjacency_[v].reserve(deg[v]);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  Vertex other = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  auto e = normalized(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite(int left, int right) {
  std::vector<Edge> edges;
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v) edges.emplace_back(u, left + v);
  return Graph(left + right, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "cycle-length", "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.has_vertex(vertices[i])) fail(ErrorKind::InvalidArgument, "vertex-range", "vertex out of range");
    if (index[vertices[i]] != -1) fail(ErrorKind::InvalidArgument, "duplicate-vertex", "vertex listed twice");
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (index[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[w]);
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> keep;
  keep.reserve(g.vertex_count());
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

Graph add_apex(const Graph& g, std::span<const Vertex> neighbors) {
  std::vector<Edge> edges = g.edges();
  Vertex apex = g.vertex_count();
  for (Vertex w : neighbors) edges.emplace_back(w, apex);
  return Graph(apex + 1, edges);
}

bool induces_connected(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) return false;
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!g.has_vertex(members.front()) || !g.has_vertex(members.back())) return false;
  // membership by binary search keeps this proportional to the subset, not the graph
  std::vector<char> seen(members.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex v = members[stack.back()];
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(v)) {
      auto it = std::lower_bound(members.begin(), members.end(), w);
      if (it == members.end() || *it != w) continue;
      std::size_t idx = static_cast<std::size_t>(it - members.begin());
      if (!seen[idx]) {
        seen[idx] = 1;
        stack.push_back(idx);
      }
    }
  }
  return reached == members.size();
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return induces_connected(g, all);
}

void Digraph::add_arc(Vertex from, Vertex to) {
  if (from < 0 || to < 0 || from >= vertex_count || to >= vertex_count)
    fail(ErrorKind::InvalidArgument, "vertex-range", "arc endpoint out of range");
  out[from].push_back(to);
}

Vertex GridSpec::vertex(int x, int y) const {
  if (!contains(x, y))
    fail(ErrorKind::InvalidArgument, "grid-coordinate",
         "grid coordinate (" + std::to_string(x) + "," + std::to_string(y) + ") outside " +
             std::to_string(rows) + "x" + std::to_string(cols));
  return (x - 1) * cols + (y - 1);
}

std::pair<int, int> GridSpec::coord(Vertex v) const {
  if (v < 0 || v >= size()) fail(ErrorKind::InvalidArgument, "grid-vertex", "vertex outside grid");
  return {v / cols + 1, v % cols + 1};
}

std::pair<Graph, GridSpec> make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1)
    fail(ErrorKind::InvalidArgument, "grid-dimension",
         "grid dimensions must be positive, got " + std::to_string(rows) + "x" + std::to_string(cols));
  GridSpec spec{rows, cols};
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2) * rows * cols);
  for (int x = 1; x <= rows; ++x)
    for (int y = 1; y <= cols; ++y) {
      if (x < rows) edges.emplace_back(spec.vertex(x, y), spec.vertex(x + 1, y));
      if (y < cols) edges.emplace_back(spec.vertex(x, y), spec.vertex(x, y + 1));
    }
  return {Graph(spec.size(), edges), spec};
}

bool is_grid_graph(const Graph& g, const GridSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1 || g.vertex_count() != spec.size()) return false;
  long expected = static_cast<long>(spec.rows) * (spec.cols - 1) + static_cast<long>(spec.cols) * (spec.rows - 1);
  if (g.edge_count() != expected) return false;
  for (auto [u, v] : g.edges()) {
    auto [x1, y1] = spec.coord(u);
    auto [x2, y2] = spec.coord(v);
    if (std::abs(x1 - x2) + std::abs(y1 - y2) != 1) return false;
  }
  return true;
}

}  // namespace apexminor
