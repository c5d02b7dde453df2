#pragma once

#include <vector>

#include "apexminor/graph.hpp"
#include "apexminor/minor_model.hpp"

namespace apexminor {

/// Bags indexed by tree node; `tree` is a graph over the nodes.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  Graph tree;

  int width() const;
  bool is_path() const;

  /// Path decomposition with consecutive bags joined.
  static TreeDecomposition path(std::vector<std::vector<Vertex>> bags);
};

struct DecompositionCheck {
  std::vector<Violation> violations;  // kinds: "tree", "range", "vertex coverage", "edge coverage", "subtree"
  int width = -1;

  bool ok() const { return violations.empty(); }
};

DecompositionCheck verify_decomposition(const Graph& g, const TreeDecomposition& d);

}  // namespace apexminor
