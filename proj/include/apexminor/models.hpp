#pragma once

#include <vector>

#include "apexminor/minor_model.hpp"

namespace apexminor {

/// Model in the doubled grid plus, per pattern vertex, an anchor cell h_u that
/// lies in B_u and touches no representing edge.
struct DoubledModel {
  MinorModel model;
  GridSpec grid;                // the 2k x 2l host grid
  std::vector<Vertex> anchors;  // pattern vertex -> host grid vertex
};

/// Doubles a model whose host is exactly the `grid` grid graph. Each cell (x, y)
/// becomes the 2x2 block with top-left (2x-1, 2y-1); anchors are the top-left
/// corner of the lexicographically least cell of each branch set.
DoubledModel double_model(const MinorModel& m, const GridSpec& grid);

/// Checks the anchor invariants (in branch set, both coordinates odd, not an
/// endpoint of any representing edge). Empty result means OK.
std::vector<Violation> verify_anchors(const DoubledModel& dm);

/// K_{2,t} model in the 3c x (c+2) grid, c = ceil(sqrt(t)). Pattern vertices
/// 0 and 1 are the two sides; 2..t+1 are the singleton centres.
GridModel k2t_model(int t);

/// Merges p x p blocks of an N x M grid model into an (N/p) x (M/p) grid model.
GridModel contract_subgrids(const GridModel& m, int p);

/// Drops one pattern row and column so that no branch set contains host vertex
/// `v`. Cells of the dropped row merge into the cell above, cells of the dropped
/// column into the cell to the left; if v is unused the last row and column go.
GridModel shrink_grid_model_avoiding(const GridModel& m, Vertex v);

/// Keeps the top-left rows x cols cells.
GridModel crop_grid_model(const GridModel& m, int rows, int cols);

}  // namespace apexminor
