#include "apexminor/constructions.hpp"

#include <algorithm>
#include <string>

#include "apexminor/bfs.hpp"
#include "apexminor/error.hpp"
#include "apexminor/int_math.hpp"
#include "apexminor/oracles.hpp"

namespace apexminor {

LowerBoundGraph lower_bound_graph(int r, int k) {
  if (r < 1 || k < 1) fail(ErrorKind::InvalidArgument, "parameter-range", "need r, k >= 1");
  const int block = 2 * r - 1;
  const int side = block * k;
  auto [grid_graph, grid] = make_grid(side, side);

  LowerBoundWitness w;
  w.r = r;
  w.k = k;
  w.grid_side = side;
  w.apex = grid.size();
  for (int x = 1; x <= k; ++x)
    for (int y = 1; y <= k; ++y) {
      const int cx = block * x - (r - 1), cy = block * y - (r - 1);
      w.w_set.push_back(grid.vertex(cx, cy));
      // main diagonal and anti-diagonal through the centre, one per unit face
      for (int d = -(r - 1); d <= r - 2; ++d) {
        w.diagonal_edges.emplace_back(grid.vertex(cx + d, cy + d), grid.vertex(cx + d + 1, cy + d + 1));
        w.diagonal_edges.emplace_back(grid.vertex(cx + d, cy - d), grid.vertex(cx + d + 1, cy - d - 1));
      }
    }
  std::sort(w.w_set.begin(), w.w_set.end());
  for (auto& e : w.diagonal_edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(w.diagonal_edges.begin(), w.diagonal_edges.end());

  std::vector<Edge> edges = grid_graph.edges();
  edges.insert(edges.end(), w.diagonal_edges.begin(), w.diagonal_edges.end());
  for (Vertex c : w.w_set) edges.emplace_back(c, w.apex);
  return LowerBoundGraph{Graph(grid.size() + 1, edges), grid, std::move(w)};
}

WitnessReport check_lower_bound(const LowerBoundGraph& lb) {
  WitnessReport out;
  const Graph& g = lb.graph;
  const auto& w = lb.witness;
  const GridSpec& grid = lb.grid;

  out.grid_subgraph = grid.rows == w.grid_side && grid.cols == w.grid_side && g.vertex_count() == grid.size() + 1;
  if (out.grid_subgraph) {
    auto [pure, spec] = make_grid(grid.rows, grid.cols);
    out.grid_subgraph = std::all_of(pure.edges().begin(), pure.edges().end(),
                                    [&](const Edge& e) { return g.has_edge(e.first, e.second); });
  }

  auto dist = bfs_distances(g, w.apex);
  out.radius_ok = std::all_of(dist.begin(), dist.end(), [&](int d) { return d >= 0 && d <= w.r; });

  Graph planar_part = delete_vertex(g, w.apex);
  out.planar_part = planarity_test(planar_part);

  std::vector<Vertex> nbrs(g.neighbors(w.apex).begin(), g.neighbors(w.apex).end());
  out.apex_degree = static_cast<int>(nbrs.size()) == w.k * w.k && nbrs == w.w_set;

  // multi-source BFS from W inside G - apex (apex is the last id, so ids agree)
  std::vector<int> from_w(planar_part.vertex_count(), -1);
  std::vector<Vertex> queue(w.w_set.begin(), w.w_set.end());
  for (Vertex c : queue) from_w[c] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex y : planar_part.neighbors(queue[head]))
      if (from_w[y] < 0) {
        from_w[y] = from_w[queue[head]] + 1;
        queue.push_back(y);
      }
  out.near_w = std::all_of(from_w.begin(), from_w.end(), [&](int d) { return d >= 0 && d <= w.r - 1; });
  return out;
}

LowerBoundParams lower_bound_params_genus(int g, int r) {
  if (g < 2 || r < 1) fail(ErrorKind::InvalidArgument, "parameter-range", "need g >= 2 and r >= 1");
  // largest k with 2k^2 <= g
  int k = static_cast<int>(isqrt_floor(g / 2));
  return {k, (2 * r - 1) * k};
}

ApexLowerBoundParams apex_lb_params(int t, int r) {
  if (t < 4 || r < 1) fail(ErrorKind::InvalidArgument, "parameter-range", "need t >= 4 and r >= 1");
  // ceil(sqrt((t-3)/6)) is the least c with 6c^2 >= t-3
  long long c = 0;
  while (6 * c * c < t - 3) ++c;
  ApexLowerBoundParams out;
  out.k = static_cast<int>(c - 1);
  out.n = (2 * r - 1) * out.k;
  out.genus_check = 6LL * out.k * out.k < t - 3;
  return out;
}

}  // namespace apexminor
