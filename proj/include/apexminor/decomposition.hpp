#pragma once

#include <vector>

#include "apexminor/bfs.hpp"
#include "apexminor/graph.hpp"
#include "apexminor/oracles.hpp"
#include "apexminor/tree_decomposition.hpp"

namespace apexminor {

/// Path decomposition ({u} + V1 + V2, V2 + V3, V3 + V4, ...) over the BFS
/// layers around u. Eccentricity <= 2 collapses to one bag holding everything.
struct LayeredDecomposition {
  TreeDecomposition base;
  Vertex root = 0;
  BfsLayering layering;
};

/// Throws Precondition ("disconnected") when g is not connected.
LayeredDecomposition layered_path_decomposition(const Graph& g, Vertex u);

/// G_i: the layers V_i and V_{i+1} plus one vertex u_i standing for the
/// contracted ball V_0 + ... + V_{i-1}. Vertex 0 is u_i; vertex j >= 1 is
/// members[j - 1] of the original graph.
struct LayerGraph {
  Graph graph;
  Vertex root = 0;
  std::vector<Vertex> members;     // sorted V_i + V_{i+1}
  std::vector<Vertex> contracted;  // sorted V_0 + ... + V_{i-1}
};

/// Throws InvalidArgument ("layer-range") unless 1 <= i <= eccentricity(u).
LayerGraph contracted_layer_graph(const Graph& g, Vertex u, int i);

/// Exact treewidth of every bag of the layered decomposition, in bag order.
/// Throws LimitExceeded ("bag-size") when a bag exceeds the oracle limit.
std::vector<int> bag_treewidths(const Graph& g, Vertex u, const OracleLimits& limits = {});

/// Largest bag treewidth: an upper bound on the tree-treewidth of g.
int ttw_upper(const Graph& g, Vertex u, const OracleLimits& limits = {});

}  // namespace apexminor
