#pragma once

#include <utility>
#include <vector>

#include "apexminor/graph.hpp"

namespace apexminor {

/// Distance layers V_0..V_e around a centre vertex; e is the centre's eccentricity.
struct BfsLayering {
  Vertex centre = 0;
  std::vector<std::vector<Vertex>> layers;  // each layer sorted ascending
  std::vector<int> distance;                // distance[v] == index of v's layer

  int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
};

/// Paths P_x from every vertex x to the centre, all taken from one BFS tree.
struct CentrePaths {
  Vertex centre = 0;
  std::vector<Vertex> parent;  // parent[centre] == -1
  std::vector<int> distance;

  /// P_x as x, parent(x), ..., centre.
  std::vector<Vertex> path(Vertex x) const;
  /// I_x: interior vertices of P_x, ordered from x's side towards the centre.
  std::vector<Vertex> internal(Vertex x) const;
};

/// Throws Precondition (code "disconnected") naming an unreachable vertex.
BfsLayering bfs_layering(const Graph& g, Vertex centre);

/// Unchecked single-source distances; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Radius and the minimum-id centre attaining it.
std::pair<int, Vertex> radius_and_centre(const Graph& g);

CentrePaths centre_paths(const Graph& g, Vertex centre);

}  // namespace apexminor
