#pragma once

#include <chrono>
#include <optional>

#include "apexminor/graph.hpp"
#include "apexminor/minor_model.hpp"
#include "apexminor/tree_decomposition.hpp"

namespace apexminor {

struct OracleLimits {
  int max_tw_vertices = 18;
  int max_minor_pattern = 6;
  int max_minor_host = 64;
  std::chrono::milliseconds time_budget{60'000};
};

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
  std::vector<Vertex> elimination_order;
};

/// Exact treewidth by dynamic programming over vertex subsets (elimination
/// orderings). Throws LimitExceeded above limits.max_tw_vertices.
TreewidthResult exact_treewidth(const Graph& g, const OracleLimits& limits = {});

/// Exhaustive branch-and-bound for an h-model in g; nullopt means h is not a
/// minor of g. Throws LimitExceeded on size limits or an exhausted time budget.
std::optional<MinorModel> minor_test(GraphPtr g, GraphPtr h, const OracleLimits& limits = {});

bool planarity_test(const Graph& g);

}  // namespace apexminor
