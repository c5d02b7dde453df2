#pragma once

// Shared helpers for the test suites: seeded random instances and brute-force
// reference implementations that deliberately share no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "apexminor/graph.hpp"
#include "apexminor/minor_model.hpp"

namespace support {

using apexminor::Edge;
using apexminor::Graph;
using apexminor::GridSpec;
using apexminor::Vertex;

/// Random tree plus each further pair with probability `density`.
inline Graph random_connected(std::mt19937_64& rng, int n, double density) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
  std::set<Edge> seen;
  for (auto [a, b] : edges) seen.insert({std::min(a, b), std::max(a, b)});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!seen.count({a, b}) && coin(rng) < density) edges.emplace_back(a, b);
  return Graph(n, edges);
}

inline Graph random_tree(std::mt19937_64& rng, int n) { return random_connected(rng, n, 0.0); }

inline Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng) < density) edges.emplace_back(a, b);
  return Graph(n, edges);
}

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Treewidth as the minimum over all elimination orders (n <= 8).
inline int brute_treewidth(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<std::set<int>> adj(n);
    for (auto [a, b] : g.edges()) adj[a].insert(b), adj[b].insert(a);
    std::vector<char> gone(n, 0);
    int width = 0;
    for (int v : order) {
      std::vector<int> later;
      for (int w : adj[v])
        if (!gone[w]) later.push_back(w);
      width = std::max<int>(width, static_cast<int>(later.size()));
      for (int a : later)
        for (int b : later)
          if (a != b) adj[a].insert(b);
      gone[v] = 1;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

inline bool connected_subset(const Graph& g, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  std::set<Vertex> members(s.begin(), s.end()), seen{s.front()};
  std::vector<Vertex> stack{s.front()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (members.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == members.size();
}

/// Minor test by enumerating every map host vertex -> pattern vertex or unused.
inline bool brute_is_minor(const Graph& g, const Graph& h) {
  const int n = g.vertex_count(), k = h.vertex_count();
  if (k == 0) return true;
  std::vector<int> assign(n, 0);  // 0 = unused, u + 1 = pattern vertex u
  for (;;) {
    std::vector<std::vector<Vertex>> sets(k);
    for (int v = 0; v < n; ++v)
      if (assign[v]) sets[assign[v] - 1].push_back(v);
    bool ok = std::all_of(sets.begin(), sets.end(), [&](const auto& s) { return connected_subset(g, s); });
    if (ok)
      for (auto [a, b] : h.edges()) {
        bool touch = false;
        for (auto [x, y] : g.edges())
          if ((assign[x] == a + 1 && assign[y] == b + 1) || (assign[x] == b + 1 && assign[y] == a + 1)) touch = true;
        if (!touch) {
          ok = false;
          break;
        }
      }
    if (ok) return true;
    int i = 0;
    while (i < n && assign[i] == k) assign[i++] = 0;
    if (i == n) return false;
    ++assign[i];
  }
}

/// A random valid model inside the rows x cols grid graph: a few disjoint
/// connected branch sets grown from random seeds; pattern edges are a random
/// subset of the touching pairs.
inline apexminor::MinorModel random_grid_model(std::mt19937_64& rng, int rows, int cols, int max_sets) {
  auto [grid_graph, grid] = apexminor::make_grid(rows, cols);
  const int cells = grid.size();
  const int sets = 1 + static_cast<int>(rng() % std::min(max_sets, cells));
  std::vector<int> owner(cells, -1);
  std::vector<Vertex> order(cells);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<Vertex>> branch(sets);
  for (int u = 0; u < sets; ++u) {
    owner[order[u]] = u;
    branch[u].push_back(order[u]);
  }
  const int steps = static_cast<int>(rng() % (cells + 1));
  for (int s = 0; s < steps; ++s) {
    int u = static_cast<int>(rng() % sets);
    Vertex from = branch[u][rng() % branch[u].size()];
    auto nb = grid_graph.neighbors(from);
    if (nb.empty()) continue;
    Vertex to = nb[rng() % nb.size()];
    if (owner[to] == -1) {
      owner[to] = u;
      branch[u].push_back(to);
    }
  }
  std::set<Edge> touching;
  for (auto [a, b] : grid_graph.edges())
    if (owner[a] != -1 && owner[b] != -1 && owner[a] != owner[b])
      touching.insert({std::min(owner[a], owner[b]), std::max(owner[a], owner[b])});
  std::vector<Edge> pattern_edges;
  for (const Edge& e : touching)
    if (rng() % 3 != 0) pattern_edges.push_back(e);
  for (auto& b : branch) std::sort(b.begin(), b.end());
  apexminor::MinorModel m{apexminor::share(grid_graph), apexminor::share(Graph(sets, pattern_edges)),
                          std::move(branch), {}};
  apexminor::find_rep_edges(m);
  return m;
}

}  // namespace support
