#include "apexminor/bfs.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "apexminor/error.hpp"

namespace apexminor {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v))
    fail(ErrorKind::InvalidArgument, "vertex-range", "vertex " + std::to_string(v) + " not in graph");
}

// BFS visiting neighbors in ascending order; parent[] records the first discoverer.
std::pair<std::vector<int>, std::vector<Vertex>> bfs_tree(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> parent(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      }
  }
  return {std::move(dist), std::move(parent)};
}

[[noreturn]] void unreachable(Vertex from, Vertex v) {
  fail(ErrorKind::Precondition, "disconnected",
       "graph is disconnected: vertex " + std::to_string(v) + " unreachable from " + std::to_string(from));
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  require_vertex(g, source);
  return bfs_tree(g, source).first;
}

BfsLayering bfs_layering(const Graph& g, Vertex centre) {
  require_vertex(g, centre);
  BfsLayering out;
  out.centre = centre;
  out.distance = bfs_tree(g, centre).first;
  int ecc = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (out.distance[v] < 0) unreachable(centre, v);
    ecc = std::max(ecc, out.distance[v]);
  }
  out.layers.assign(ecc + 1, {});
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.layers[out.distance[v]].push_back(v);
  return out;
}

std::pair<int, Vertex> radius_and_centre(const Graph& g) {
  if (g.vertex_count() == 0) fail(ErrorKind::Precondition, "empty-graph", "radius of the empty graph");
  int best = std::numeric_limits<int>::max();
  Vertex centre = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_tree(g, v).first;
    int ecc = 0;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (dist[w] < 0) unreachable(v, w);
      ecc = std::max(ecc, dist[w]);
      if (ecc >= best) break;
    }
    if (ecc < best) {
      best = ecc;
      centre = v;
    }
  }
  return {best, centre};
}

CentrePaths centre_paths(const Graph& g, Vertex centre) {
  require_vertex(g, centre);
  auto [dist, parent] = bfs_tree(g, centre);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v] < 0) unreachable(centre, v);
  return CentrePaths{centre, std::move(parent), std::move(dist)};
}

std::vector<Vertex> CentrePaths::path(Vertex x) const {
  std::vector<Vertex> out;
  out.reserve(distance.at(x) + 1);
  for (Vertex v = x; v != -1; v = parent[v]) out.push_back(v);
  return out;
}

std::vector<Vertex> CentrePaths::internal(Vertex x) const {
  std::vector<Vertex> out;
  if (distance.at(x) < 2) return out;
  for (Vertex v = parent[x]; v != centre; v = parent[v]) out.push_back(v);
  return out;
}

}  // namespace apexminor
