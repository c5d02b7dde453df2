#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apexminor/contraction.hpp"
#include "apexminor/graph.hpp"

namespace apexminor {

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// Certificate that `pattern` is a minor of `host`.
///
/// branch_sets[u] is the sorted host-vertex set of pattern vertex u. rep_edges[i]
/// is the host edge representing pattern->edges()[i] = (u, v), stored with the
/// endpoint in B_u first.
struct MinorModel {
  GraphPtr host;
  GraphPtr pattern;
  std::vector<std::vector<Vertex>> branch_sets;
  std::vector<Edge> rep_edges;

  /// host vertex -> pattern vertex owning it, -1 if unused. Assumes disjointness.
  std::vector<Vertex> owners() const;
};

struct Violation {
  std::string kind;    // "shape", "range", "empty", "disjointness", "connectivity", "representation"
  std::string detail;  // names the offending branch set or edge
};

/// Empty result means the model is valid.
std::vector<Violation> verify_minor_model(const MinorModel& m);

inline bool is_valid(const MinorModel& m) { return verify_minor_model(m).empty(); }

/// Fills rep_edges by searching for a host edge between each pair of adjacent
/// branch sets. Returns false if some pattern edge has no representative.
bool find_rep_edges(MinorModel& m);

/// A model whose pattern is the `grid` grid graph.
struct GridModel {
  MinorModel model;
  GridSpec grid;

  const std::vector<Vertex>& cell(int x, int y) const { return model.branch_sets[grid.vertex(x, y)]; }
};

/// Model of the grid occupying host vertices 0..grid.size()-1 in row-major
/// order, each cell its own singleton branch set.
GridModel identity_grid_model(GraphPtr host, const GridSpec& grid);

/// Builds a grid model from per-cell branch sets (row-major), finding
/// representing edges. Throws Defect ("missing-representative") on failure.
GridModel grid_model_from_cells(GraphPtr host, const GridSpec& grid, std::vector<std::vector<Vertex>> cells);

/// Expands a model living in a contracted graph back to the original host.
/// Branch sets become unions of preimages; representing edges are re-found.
MinorModel lift_model(const MinorModel& contracted, const Contraction& c, GraphPtr original_host);

/// Human-readable one-line summary of the violations.
std::string describe(const std::vector<Violation>& violations);

}  // namespace apexminor
