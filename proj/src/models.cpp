#include "apexminor/models.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "apexminor/error.hpp"
#include "apexminor/int_math.hpp"

namespace apexminor {

namespace {

void require_valid(const MinorModel& m, const char* what) {
  auto violations = verify_minor_model(m);
  if (!violations.empty())
    fail(ErrorKind::InvalidArgument, "invalid-model", std::string(what) + ": " + describe(violations));
}

void require_grid_pattern(const GridModel& m) {
  if (!is_grid_graph(*m.model.pattern, m.grid))
    fail(ErrorKind::InvalidArgument, "not-grid", "pattern is not the declared grid");
}

}  // namespace

DoubledModel double_model(const MinorModel& m, const GridSpec& grid) {
  if (!m.host || !is_grid_graph(*m.host, grid))
    fail(ErrorKind::InvalidArgument, "not-grid", "double_model needs a model whose host is the declared grid");
  require_valid(m, "double_model input");

  GridSpec big{2 * grid.rows, 2 * grid.cols};
  DoubledModel out;
  out.grid = big;
  out.model.host = share(make_grid(big.rows, big.cols).first);
  out.model.pattern = m.pattern;
  out.model.branch_sets.resize(m.branch_sets.size());
  out.anchors.resize(m.branch_sets.size());

  for (std::size_t u = 0; u < m.branch_sets.size(); ++u) {
    auto& set = out.model.branch_sets[u];
    std::pair<int, int> least{grid.rows + 1, grid.cols + 1};
    for (Vertex cell : m.branch_sets[u]) {
      auto [x, y] = grid.coord(cell);
      least = std::min(least, {x, y});
      set.push_back(big.vertex(2 * x, 2 * y));
      set.push_back(big.vertex(2 * x - 1, 2 * y));
      set.push_back(big.vertex(2 * x, 2 * y - 1));
      set.push_back(big.vertex(2 * x - 1, 2 * y - 1));
    }
    std::sort(set.begin(), set.end());
    out.anchors[u] = big.vertex(2 * least.first - 1, 2 * least.second - 1);
  }

  out.model.rep_edges.reserve(m.rep_edges.size());
  for (auto [a, b] : m.rep_edges) {
    auto ca = grid.coord(a);
    auto cb = grid.coord(b);
    auto [x, y] = std::min(ca, cb);
    bool horizontal = ca.second == cb.second;
    Vertex near = big.vertex(2 * x, 2 * y);
    Vertex far = horizontal ? big.vertex(2 * x + 1, 2 * y) : big.vertex(2 * x, 2 * y + 1);
    // keep the endpoint in the first pattern vertex's branch set first
    out.model.rep_edges.push_back(ca < cb ? Edge{near, far} : Edge{far, near});
  }
  return out;
}

std::vector<Violation> verify_anchors(const DoubledModel& dm) {
  std::vector<Violation> out;
  if (dm.anchors.size() != dm.model.branch_sets.size()) {
    out.push_back({"shape", "anchor count differs from branch set count"});
    return out;
  }
  std::vector<char> on_rep(dm.grid.size(), 0);
  for (auto [a, b] : dm.model.rep_edges) {
    if (a >= 0 && a < dm.grid.size()) on_rep[a] = 1;
    if (b >= 0 && b < dm.grid.size()) on_rep[b] = 1;
  }
  for (std::size_t u = 0; u < dm.anchors.size(); ++u) {
    Vertex h = dm.anchors[u];
    std::string name = "anchor of " + std::to_string(u);
    if (h < 0 || h >= dm.grid.size()) {
      out.push_back({"anchor", name + " outside the grid"});
      continue;
    }
    const auto& set = dm.model.branch_sets[u];
    if (!std::binary_search(set.begin(), set.end(), h)) out.push_back({"anchor", name + " not in its branch set"});
    auto [x, y] = dm.grid.coord(h);
    if (x % 2 == 0 || y % 2 == 0) out.push_back({"anchor", name + " has an even coordinate"});
    if (on_rep[h]) out.push_back({"anchor", name + " is an endpoint of a representing edge"});
  }
  return out;
}

GridModel k2t_model(int t) {
  if (t < 1) fail(ErrorKind::InvalidArgument, "k2t-size", "t must be positive");
  int c = static_cast<int>(isqrt_ceil(t));
  GridSpec grid{3 * c, c + 2};
  const int rows = grid.rows, cols = grid.cols;

  std::vector<std::vector<Vertex>> sets(2 + t);
  for (int x = 1; x <= rows; ++x) {
    sets[0].push_back(grid.vertex(x, 1));
    sets[1].push_back(grid.vertex(x, cols));
    for (int y = 2; y < cols; ++y) {
      if (x % 3 == 1) sets[0].push_back(grid.vertex(x, y));
      if (x % 3 == 0) sets[1].push_back(grid.vertex(x, y));
    }
  }
  int placed = 0;
  for (int x = 2; x <= rows && placed < t; x += 3)
    for (int y = 2; y < cols && placed < t; ++y) sets[2 + placed++] = {grid.vertex(x, y)};

  MinorModel m{share(make_grid(rows, cols).first), share(complete_bipartite(2, t)), std::move(sets), {}};
  for (auto& s : m.branch_sets) std::sort(s.begin(), s.end());
  if (!find_rep_edges(m)) fail(ErrorKind::Defect, "missing-representative", "K_{2,t} layout lacks an edge");
  return GridModel{std::move(m), grid};
}

GridModel contract_subgrids(const GridModel& m, int p) {
  if (p < 1) fail(ErrorKind::InvalidArgument, "block-size", "block size must be positive");
  if (m.grid.rows % p != 0 || m.grid.cols % p != 0)
    fail(ErrorKind::InvalidArgument, "non-divisible",
         "block size " + std::to_string(p) + " does not divide " + std::to_string(m.grid.rows) + "x" +
             std::to_string(m.grid.cols));
  require_grid_pattern(m);
  require_valid(m.model, "contract_subgrids input");
  if (p == 1) return m;

  GridSpec small{m.grid.rows / p, m.grid.cols / p};
  std::vector<std::vector<Vertex>> cells(small.size());
  for (int i = 1; i <= small.rows; ++i)
    for (int j = 1; j <= small.cols; ++j) {
      auto& cell = cells[small.vertex(i, j)];
      for (int x = p * (i - 1) + 1; x <= p * i; ++x)
        for (int y = p * (j - 1) + 1; y <= p * j; ++y) {
          const auto& part = m.cell(x, y);
          cell.insert(cell.end(), part.begin(), part.end());
        }
    }
  return grid_model_from_cells(m.model.host, small, std::move(cells));
}

GridModel shrink_grid_model_avoiding(const GridModel& m, Vertex v) {
  const int rows = m.grid.rows, cols = m.grid.cols;
  if (rows < 2 || cols < 2)
    fail(ErrorKind::InvalidArgument, "grid-dimension", "shrinking needs at least a 2x2 grid model");
  require_grid_pattern(m);

  int del_row = rows, del_col = cols;
  bool used = false;
  for (int cell = 0; cell < m.grid.size() && !used; ++cell) {
    const auto& set = m.model.branch_sets[cell];
    if (std::binary_search(set.begin(), set.end(), v)) {
      std::tie(del_row, del_col) = m.grid.coord(cell);
      used = true;
    }
  }
  const bool bridge_rows = used && del_row > 1 && del_row < rows;
  const bool bridge_cols = used && del_col > 1 && del_col < cols;

  GridSpec small{rows - 1, cols - 1};
  std::vector<std::vector<Vertex>> cells(small.size());
  for (int x = 1; x <= rows; ++x) {
    for (int y = 1; y <= cols; ++y) {
      if (x == del_row && y == del_col) continue;
      int tx = x, ty = y;
      if (x == del_row) {
        if (!bridge_rows) continue;
        tx = x - 1;
      } else if (y == del_col) {
        if (!bridge_cols) continue;
        ty = y - 1;
      }
      int nx = tx < del_row ? tx : tx - 1;
      int ny = ty < del_col ? ty : ty - 1;
      auto& target = cells[small.vertex(nx, ny)];
      const auto& part = m.cell(x, y);
      target.insert(target.end(), part.begin(), part.end());
    }
  }
  return grid_model_from_cells(m.model.host, small, std::move(cells));
}

GridModel crop_grid_model(const GridModel& m, int rows, int cols) {
  if (rows < 1 || cols < 1 || rows > m.grid.rows || cols > m.grid.cols)
    fail(ErrorKind::InvalidArgument, "grid-dimension", "crop outside the grid model");
  GridSpec small{rows, cols};
  std::vector<std::vector<Vertex>> cells(small.size());
  for (int x = 1; x <= rows; ++x)
    for (int y = 1; y <= cols; ++y) cells[small.vertex(x, y)] = m.cell(x, y);
  return grid_model_from_cells(m.model.host, small, std::move(cells));
}

}  // namespace apexminor
