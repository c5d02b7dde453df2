#include "apexminor/tree_decomposition.hpp"

#include <algorithm>
#include <string>

namespace apexminor {

int TreeDecomposition::width() const {
  std::size_t widest = 0;
  for (const auto& bag : bags) widest = std::max(widest, bag.size());
  return static_cast<int>(widest) - 1;
}

bool TreeDecomposition::is_path() const {
  if (tree.edge_count() != tree.vertex_count() - 1 && tree.vertex_count() > 0) return false;
  for (Vertex x = 0; x < tree.vertex_count(); ++x)
    if (tree.degree(x) > 2) return false;
  return is_connected(tree);
}

TreeDecomposition TreeDecomposition::path(std::vector<std::vector<Vertex>> bags) {
  for (auto& b : bags) std::sort(b.begin(), b.end());
  int n = static_cast<int>(bags.size());
  return TreeDecomposition{std::move(bags), path_graph(n)};
}

DecompositionCheck verify_decomposition(const Graph& g, const TreeDecomposition& d) {
  DecompositionCheck out;
  out.width = d.width();
  int nodes = static_cast<int>(d.bags.size());
  if (d.tree.vertex_count() != nodes || nodes == 0 || d.tree.edge_count() != nodes - 1 || !is_connected(d.tree)) {
    out.violations.push_back({"tree", "underlying graph is not a tree over the " + std::to_string(nodes) + " bags"});
    return out;
  }

  std::vector<std::vector<int>> occurs(g.vertex_count());
  for (int x = 0; x < nodes; ++x)
    for (Vertex v : d.bags[x]) {
      if (!g.has_vertex(v)) {
        out.violations.push_back({"range", "bag " + std::to_string(x) + " has unknown vertex " + std::to_string(v)});
        continue;
      }
      if (occurs[v].empty() || occurs[v].back() != x) occurs[v].push_back(x);
    }

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (occurs[v].empty()) {
      out.violations.push_back({"vertex coverage", "vertex " + std::to_string(v) + " is in no bag"});
      continue;
    }
    if (!induces_connected(d.tree, occurs[v]))
      out.violations.push_back({"subtree", "bags containing vertex " + std::to_string(v) + " are not connected"});
  }

  for (auto [u, v] : g.edges()) {
    const auto& a = occurs[u];
    const auto& b = occurs[v];
    bool covered = false;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] == b[j]) {
        covered = true;
        break;
      }
      a[i] < b[j] ? ++i : ++j;
    }
    if (!covered)
      out.violations.push_back(
          {"edge coverage", "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag"});
  }
  return out;
}

}  // namespace apexminor
