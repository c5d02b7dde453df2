#include "apexminor/decomposition.hpp"

#include <algorithm>
#include <string>

#include "apexminor/error.hpp"

namespace apexminor {

namespace {

std::vector<Vertex> merged(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

LayeredDecomposition layered_path_decomposition(const Graph& g, Vertex u) {
  if (!g.has_vertex(u)) fail(ErrorKind::InvalidArgument, "vertex-range", "root " + std::to_string(u) + " not in graph");
  LayeredDecomposition out;
  out.root = u;
  out.layering = bfs_layering(g, u);
  const auto& layers = out.layering.layers;
  const int e = out.layering.eccentricity();

  std::vector<std::vector<Vertex>> bags;
  if (e <= 2) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    bags.push_back(std::move(all));
  } else {
    bags.push_back(merged(merged(layers[0], layers[1]), layers[2]));
    for (int i = 2; i <= e - 1; ++i) bags.push_back(merged(layers[i], layers[i + 1]));
  }
  out.base = TreeDecomposition::path(std::move(bags));
  return out;
}

LayerGraph contracted_layer_graph(const Graph& g, Vertex u, int i) {
  BfsLayering layering = bfs_layering(g, u);
  const int e = layering.eccentricity();
  if (i < 1 || i > e)
    fail(ErrorKind::InvalidArgument, "layer-range",
         "layer " + std::to_string(i) + " outside 1.." + std::to_string(e));
  const auto& layers = layering.layers;

  LayerGraph out;
  out.members = i + 1 <= e ? merged(layers[i], layers[i + 1]) : layers[i];
  for (int j = 0; j < i; ++j) out.contracted = merged(out.contracted, layers[j]);

  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t j = 0; j < out.members.size(); ++j) local[out.members[j]] = static_cast<int>(j) + 1;
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    int la = local[a], lb = local[b];
    if (la > 0 && lb > 0) edges.emplace_back(la, lb);
    // an edge leaving the ball can only land in V_i
    else if (la > 0 && layering.distance[b] < i) edges.emplace_back(0, la);
    else if (lb > 0 && layering.distance[a] < i) edges.emplace_back(0, lb);
  }
  out.graph = Graph::simple_closure(static_cast<int>(out.members.size()) + 1, std::move(edges));
  return out;
}

std::vector<int> bag_treewidths(const Graph& g, Vertex u, const OracleLimits& limits) {
  LayeredDecomposition d = layered_path_decomposition(g, u);
  std::vector<int> out;
  for (std::size_t i = 0; i < d.base.bags.size(); ++i) {
    const auto& bag = d.base.bags[i];
    if (static_cast<int>(bag.size()) > limits.max_tw_vertices)
      fail(ErrorKind::LimitExceeded, "bag-size",
           "bag " + std::to_string(i + 1) + " has " + std::to_string(bag.size()) +
               " vertices, above the exact treewidth limit " + std::to_string(limits.max_tw_vertices));
    out.push_back(exact_treewidth(induced_subgraph(g, bag), limits).width);
  }
  return out;
}

int ttw_upper(const Graph& g, Vertex u, const OracleLimits& limits) {
  auto widths = bag_treewidths(g, u, limits);
  return *std::max_element(widths.begin(), widths.end());
}

}  // namespace apexminor
