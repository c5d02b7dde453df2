#include <doctest.h>

#include <algorithm>
#include <random>

#include "apexminor/decomposition.hpp"
#include "apexminor/error.hpp"
#include "support/support.hpp"

using namespace apexminor;

TEST_CASE("layered_path_decomposition on a path") {
  Graph p = path_graph(7);
  auto d = layered_path_decomposition(p, 0);
  CHECK(d.base.bags == std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(d.base.is_path());
  CHECK(verify_decomposition(p, d.base).ok());
  CHECK(d.layering.eccentricity() == 6);
}

TEST_CASE("layered_path_decomposition collapses small eccentricity") {
  Graph k = complete_graph(5);
  auto d = layered_path_decomposition(k, 3);
  CHECK(d.base.bags.size() == 1);
  CHECK(d.base.bags[0] == std::vector<Vertex>{0, 1, 2, 3, 4});
  Graph p = path_graph(5);
  CHECK(layered_path_decomposition(p, 2).base.bags.size() == 1);
}

TEST_CASE("layered_path_decomposition rejects bad input") {
  Graph two(2, std::vector<Edge>{});
  try {
    layered_path_decomposition(two, 0);
    FAIL("expected disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == "disconnected");
  }
  CHECK_THROWS_AS(layered_path_decomposition(path_graph(3), 5), Error);
}

TEST_CASE("contracted_layer_graph on a path") {
  Graph p = path_graph(6);
  auto g2 = contracted_layer_graph(p, 0, 2);
  CHECK(g2.members == std::vector<Vertex>{2, 3});
  CHECK(g2.contracted == std::vector<Vertex>{0, 1});
  CHECK(g2.graph.vertex_count() == 3);
  CHECK(g2.graph.has_edge(0, 1));
  CHECK(g2.graph.has_edge(1, 2));
  CHECK_FALSE(g2.graph.has_edge(0, 2));
  CHECK_THROWS_AS(contracted_layer_graph(p, 0, 0), Error);
  CHECK_THROWS_AS(contracted_layer_graph(p, 0, 6), Error);
}

TEST_CASE("layered decompositions of random connected graphs") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 40);
    Graph g = support::random_connected(rng, n, 0.02 + 0.1 * (rng() % 5) / 4.0);
    const Vertex u = static_cast<Vertex>(rng() % n);
    CAPTURE(round);
    auto d = layered_path_decomposition(g, u);
    CHECK(d.base.is_path());
    CHECK(verify_decomposition(g, d.base).ok());
    for (int i = 1; i <= d.layering.eccentricity(); ++i) {
      auto gi = contracted_layer_graph(g, u, i);
      auto dist = bfs_distances(gi.graph, gi.root);
      CHECK(*std::min_element(dist.begin(), dist.end()) >= 0);
      CHECK(*std::max_element(dist.begin(), dist.end()) <= 2);
      // members and contracted ball partition V_0..V_{i+1}
      std::size_t covered = 0;
      for (int j = 0; j <= std::min(i + 1, d.layering.eccentricity()); ++j) covered += d.layering.layers[j].size();
      CHECK(gi.members.size() + gi.contracted.size() == covered);
    }
  }
}

TEST_CASE("bag treewidth is bounded by the treewidth of the layer graph") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 40; ++round) {
    const int n = 4 + static_cast<int>(rng() % 11);
    Graph g = support::random_connected(rng, n, 0.15);
    const Vertex u = static_cast<Vertex>(rng() % n);
    auto d = layered_path_decomposition(g, u);
    const int e = d.layering.eccentricity();
    if (e <= 2) continue;
    auto widths = bag_treewidths(g, u);
    REQUIRE(widths.size() == d.base.bags.size());
    // bag j (j >= 1) is V_{j+1} + V_{j+2}, a subgraph of G_{j+1}
    for (std::size_t j = 1; j < widths.size(); ++j) {
      auto gi = contracted_layer_graph(g, u, static_cast<int>(j) + 1);
      CHECK(widths[j] <= exact_treewidth(gi.graph).width);
      if (d.base.bags[j].size() <= 8)
        CHECK(widths[j] == support::brute_treewidth(induced_subgraph(g, d.base.bags[j])));
    }
  }
}

TEST_CASE("ttw_upper examples") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + static_cast<int>(rng() % 30);
    Graph t = support::random_tree(rng, n);
    CHECK(ttw_upper(t, static_cast<Vertex>(rng() % n)) == 1);
  }
  CHECK(ttw_upper(complete_graph(6), 0) == 5);

  auto [g6, s6] = make_grid(6, 6);
  std::vector<Vertex> all6(36);
  for (int v = 0; v < 36; ++v) all6[v] = v;
  Graph apex6 = add_apex(g6, all6);
  try {
    ttw_upper(apex6, 36);
    FAIL("expected bag-size");
  } catch (const Error& e) {
    CHECK(e.code() == "bag-size");
    CHECK(e.kind() == ErrorKind::LimitExceeded);
  }
  OracleLimits wide;
  wide.max_tw_vertices = 10;
  auto [g3, s3] = make_grid(3, 3);
  std::vector<Vertex> all3{0, 1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(ttw_upper(add_apex(g3, all3), 9, wide) == 4);
}
