#pragma once

#include <string>
#include <vector>

#include "apexminor/graph.hpp"

namespace apexminor {

/// Certificate accompanying lower_bound_graph: the Euler genus is at most
/// 2k^2 because G - apex is planar and the apex has degree k^2.
struct LowerBoundWitness {
  Vertex apex = 0;
  std::vector<Vertex> w_set;  // sorted grid vertex ids of W
  int grid_side = 0;          // (2r-1)k
  int r = 0;
  int k = 0;
  std::vector<Edge> diagonal_edges;
  std::string gadget = "block-diagonal-x";
};

struct LowerBoundGraph {
  Graph graph;  // grid on ids 0..side^2-1 (row-major), apex last
  GridSpec grid;
  LowerBoundWitness witness;
};

/// (2r-1)k square grid, an X of diagonal shortcut edges through the centre of
/// every (2r-1)x(2r-1) block, and an apex adjacent to the block centres.
LowerBoundGraph lower_bound_graph(int r, int k);

struct WitnessReport {
  bool grid_subgraph = false;
  bool radius_ok = false;  // every vertex within r of the apex
  bool planar_part = false;
  bool apex_degree = false;  // deg(apex) = k^2 and N(apex) = W
  bool near_w = false;       // every grid vertex within r-1 of W in G - apex

  bool ok() const { return grid_subgraph && radius_ok && planar_part && apex_degree && near_w; }
};

/// Re-derives every witness property from the graph itself.
WitnessReport check_lower_bound(const LowerBoundGraph& lb);

struct LowerBoundParams {
  int k = 0;
  int n = 0;
};

/// k = floor(sqrt(g/2)), n = (2r-1)k; so 2k^2 <= g.
LowerBoundParams lower_bound_params_genus(int g, int r);

struct ApexLowerBoundParams {
  int k = 0;
  int n = 0;
  bool genus_check = false;  // 2k^2 < (t-3)/3
};

/// k = ceil(sqrt((t-3)/6)) - 1, n = (2r-1)k.
ApexLowerBoundParams apex_lb_params(int t, int r);

}  // namespace apexminor
