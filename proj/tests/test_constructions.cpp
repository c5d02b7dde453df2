#include <doctest.h>

#include <algorithm>

#include "apexminor/bfs.hpp"
#include "apexminor/constructions.hpp"
#include "apexminor/error.hpp"
#include "apexminor/oracles.hpp"

using namespace apexminor;

TEST_CASE("lower_bound_graph (1, 1) is a single cell plus its apex") {
  auto lb = lower_bound_graph(1, 1);
  CHECK(lb.graph.vertex_count() == 2);
  CHECK(lb.graph.edge_count() == 1);
  CHECK(lb.witness.w_set == std::vector<Vertex>{0});
  CHECK(lb.witness.diagonal_edges.empty());
  CHECK(check_lower_bound(lb).ok());
}

TEST_CASE("lower_bound_graph (3, 3) matches the figure") {
  auto lb = lower_bound_graph(3, 3);
  CHECK(lb.grid == GridSpec{15, 15});
  CHECK(lb.witness.w_set.size() == 9);
  CHECK(lb.graph.degree(lb.witness.apex) == 9);
  // centres at (3,3), (3,8), ..., (13,13)
  CHECK(lb.witness.w_set.front() == lb.grid.vertex(3, 3));
  CHECK(lb.witness.w_set.back() == lb.grid.vertex(13, 13));
  // two diagonals of length 2r-2 = 4 per block
  CHECK(lb.witness.diagonal_edges.size() == 9 * 8);
  CHECK(check_lower_bound(lb).ok());
}

TEST_CASE("lower_bound_graph (2, 2)") {
  auto lb = lower_bound_graph(2, 2);
  CHECK(lb.grid == GridSpec{6, 6});
  CHECK(lb.witness.w_set ==
        std::vector<Vertex>{lb.grid.vertex(2, 2), lb.grid.vertex(2, 5), lb.grid.vertex(5, 2), lb.grid.vertex(5, 5)});
  CHECK(lb.graph.edge_count() == 60 + 4 * 4 + 4);
}

TEST_CASE("lower_bound_graph witness suite for r, k in 1..4") {
  for (int r = 1; r <= 4; ++r)
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(r);
      CAPTURE(k);
      auto lb = lower_bound_graph(r, k);
      auto rep = check_lower_bound(lb);
      CHECK(rep.grid_subgraph);
      CHECK(rep.radius_ok);
      CHECK(rep.planar_part);
      CHECK(rep.apex_degree);
      CHECK(rep.near_w);
      CHECK(lb.witness.grid_side == (2 * r - 1) * k);
      // every grid cell is within Chebyshev distance r-1 of its block centre
      for (Vertex v = 0; v < lb.grid.size(); ++v) {
        auto [x, y] = lb.grid.coord(v);
        int bx = (x - 1) / (2 * r - 1), by = (y - 1) / (2 * r - 1);
        int cx = bx * (2 * r - 1) + r, cy = by * (2 * r - 1) + r;
        CHECK(std::max(std::abs(x - cx), std::abs(y - cy)) <= r - 1);
        CHECK(std::binary_search(lb.witness.w_set.begin(), lb.witness.w_set.end(), lb.grid.vertex(cx, cy)));
      }
      auto [radius, centre] = radius_and_centre(lb.graph);
      CHECK(radius <= r);
    }
}

TEST_CASE("check_lower_bound catches a tampered graph") {
  auto lb = lower_bound_graph(2, 2);
  std::vector<Edge> edges = lb.graph.edges();
  edges.erase(std::find(edges.begin(), edges.end(), Edge{lb.witness.w_set[0], lb.witness.apex}));
  lb.graph = Graph(lb.graph.vertex_count(), edges);
  auto rep = check_lower_bound(lb);
  CHECK_FALSE(rep.apex_degree);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("lower bound parameters") {
  auto p = lower_bound_params_genus(8, 2);
  CHECK(p.k == 2);
  CHECK(p.n == 6);
  p = lower_bound_params_genus(2, 1);
  CHECK(p.k == 1);
  CHECK(p.n == 1);
  p = lower_bound_params_genus(50, 3);
  CHECK(p.k == 5);
  CHECK(p.n == 25);
  for (int g = 2; g <= 200; ++g) {
    auto q = lower_bound_params_genus(g, 1);
    CHECK(2 * q.k * q.k <= g);
    CHECK(2 * (q.k + 1) * (q.k + 1) > g);
  }
  CHECK_THROWS_AS(lower_bound_params_genus(1, 1), Error);

  auto a = apex_lb_params(27, 2);
  CHECK(a.k == 1);
  CHECK(a.n == 3);
  CHECK(a.genus_check);
  a = apex_lb_params(9, 1);
  CHECK(a.k == 0);
  CHECK(a.n == 0);
  a = apex_lb_params(99, 1);
  CHECK(a.k == 3);
  CHECK(a.n == 3);
  CHECK(a.genus_check);
  CHECK_THROWS_AS(apex_lb_params(3, 1), Error);
}
