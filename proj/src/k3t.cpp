#include "apexminor/k3t.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "apexminor/error.hpp"
#include "apexminor/int_math.hpp"
#include "apexminor/rng.hpp"

namespace apexminor {

K3tGuarantee k3t_guarantee(int n, int m, int r) {
  if (n < 1 || m < 1 || r < 1) fail(ErrorKind::InvalidArgument, "parameter-range", "need n, m, r >= 1");
  K3tGuarantee out;
  long long num = static_cast<long long>(n - 4 * r + 2) * (m - 4 * r + 2);
  long long den = 8LL * r * (2 * r - 1);
  long long g = std::gcd(num < 0 ? -num : num, den);
  out.numerator = num / g;
  out.denominator = den / g;
  const int s = 2 * r - 1;
  if (n > 2 * s && m > 2 * s) out.guaranteed = (num + den - 1) / den;
  return out;
}

std::vector<Vertex> greedy_independent_set(const Digraph& q, int cap) {
  const int n = q.vertex_count;
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    if (q.out_degree(v) > cap)
      fail(ErrorKind::InvalidArgument, "out-degree",
           "vertex " + std::to_string(v) + " has out-degree " + std::to_string(q.out_degree(v)) + " > " +
               std::to_string(cap));
    for (Vertex w : q.out[v])
      if (w != v) {
        adj[v].insert(w);
        adj[w].insert(v);
      }
  }
  std::set<std::pair<int, Vertex>> by_degree;
  for (Vertex v = 0; v < n; ++v) by_degree.emplace(static_cast<int>(adj[v].size()), v);
  std::vector<char> removed(n, 0);

  auto drop = [&](Vertex v) {
    by_degree.erase({static_cast<int>(adj[v].size()), v});
    removed[v] = 1;
    for (Vertex w : adj[v]) {
      if (removed[w]) continue;
      by_degree.erase({static_cast<int>(adj[w].size()), w});
      adj[w].erase(v);
      by_degree.emplace(static_cast<int>(adj[w].size()), w);
    }
  };

  std::vector<Vertex> out;
  while (!by_degree.empty()) {
    Vertex v = by_degree.begin()->second;
    out.push_back(v);
    std::vector<Vertex> nbrs(adj[v].begin(), adj[v].end());
    drop(v);
    for (Vertex w : nbrs)
      if (!removed[w]) drop(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

K3tExtraction extract_k3t(GraphPtr g, Vertex centre, int r, const GridModel& grid_model, const K3tConfig& cfg) {
  const Graph& host = *g;
  if (!host.has_vertex(centre)) fail(ErrorKind::InvalidArgument, "vertex-range", "centre not in graph");
  if (r < 1) fail(ErrorKind::InvalidArgument, "parameter-range", "radius must be at least 1");
  if (!grid_model.model.host || !(*grid_model.model.host == host))
    fail(ErrorKind::InvalidArgument, "host-mismatch", "grid model lives in a different graph");
  if (!is_grid_graph(*grid_model.model.pattern, grid_model.grid))
    fail(ErrorKind::InvalidArgument, "not-grid", "pattern is not the declared grid");
  if (auto v = verify_minor_model(grid_model.model); !v.empty())
    fail(ErrorKind::InvalidArgument, "invalid-model", "grid model: " + describe(v));
  for (const auto& set : grid_model.model.branch_sets)
    if (std::binary_search(set.begin(), set.end(), centre))
      fail(ErrorKind::Precondition, "centre-in-grid-model", "grid model uses the centre vertex");

  const GridSpec grid = grid_model.grid;
  const int n = grid.rows, m = grid.cols;
  K3tExtraction out;
  out.guarantee = k3t_guarantee(n, m, r);
  if (out.guarantee.guaranteed == 0)
    fail(ErrorKind::Precondition, "guarantee-zero",
         "a " + std::to_string(n) + "x" + std::to_string(m) + " grid guarantees nothing at radius " +
             std::to_string(r));

  Contraction c = contract_partition(host, grid_model.model.branch_sets);
  const Graph& contracted = c.graph;
  const Vertex alpha = c.image[centre];
  CentrePaths cp = centre_paths(contracted, alpha);

  K3tTrace& tr = out.trace;
  const int s = tr.s = 2 * r - 1;
  const int p = tr.p = (n - 2 * r + 1) / (2 * r);
  auto row_of = [&](Vertex cell) { return grid.coord(cell).second; };
  auto col_of = [&](Vertex cell) { return grid.coord(cell).first; };
  auto is_cell = [&](Vertex v) { return v < grid.size(); };

  for (int i = 1; i <= p; ++i)
    for (int j = s + 1; j <= m - s; ++j) tr.base.push_back(grid.vertex(2 * i * r, j));
  std::sort(tr.base.begin(), tr.base.end());
  for (Vertex x : tr.base)
    if (cp.distance[x] > r)
      fail(ErrorKind::Precondition, "radius",
           "grid cell (" + std::to_string(col_of(x)) + "," + std::to_string(row_of(x)) + ") is at distance " +
               std::to_string(cp.distance[x]) + " from the centre, above " + std::to_string(r));

  std::vector<std::vector<Vertex>> internal(grid.size());
  for (Vertex x : tr.base) internal[x] = cp.internal(x);

  // column sampling until more than half of A survives
  std::vector<int> column_side(n + 1, 0);  // 1 = X, 2 = Y
  bool sampled = false;
  for (int trial = 1; trial <= cfg.max_trials && !sampled; ++trial) {
    TrialRng rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
    tr.columns.assign(p + 1, 0);
    std::fill(column_side.begin(), column_side.end(), 0);
    for (int i = 1; i <= p + 1; ++i) {
      tr.columns[i - 1] = rng.uniform(2 * (i - 1) * r + 1, 2 * i * r - 1);
      column_side[tr.columns[i - 1]] = i % 2 == 1 ? 1 : 2;
    }
    tr.survivors.clear();
    for (Vertex x : tr.base) {
      bool hit = std::any_of(internal[x].begin(), internal[x].end(),
                             [&](Vertex y) { return is_cell(y) && column_side[col_of(y)] != 0; });
      if (!hit) tr.survivors.push_back(x);
    }
    tr.column_trials = trial;
    sampled = 2 * tr.survivors.size() > tr.base.size();
  }
  if (!sampled)
    fail(ErrorKind::TrialsExhausted, "trials-exhausted",
         "no column sample kept more than half of the base set in " + std::to_string(cfg.max_trials) + " trials");

  // Z_x: the horizontal run between the two chosen columns around x
  const int survivors = static_cast<int>(tr.survivors.size());
  std::vector<int> z_index(grid.size(), -1);
  std::vector<std::vector<Vertex>> z_path(survivors);
  for (int ix = 0; ix < survivors; ++ix) {
    Vertex x = tr.survivors[ix];
    int i = col_of(x) / (2 * r);
    int j = row_of(x);
    for (int col = tr.columns[i - 1] + 1; col < tr.columns[i]; ++col) {
      Vertex cell = grid.vertex(col, j);
      z_index[cell] = ix;
      z_path[ix].push_back(cell);
    }
  }

  Digraph conflicts(survivors);
  for (int ix = 0; ix < survivors; ++ix) {
    std::vector<int> targets;
    for (Vertex y : internal[tr.survivors[ix]])
      if (is_cell(y) && z_index[y] != -1 && z_index[y] != ix) targets.push_back(z_index[y]);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int iy : targets) conflicts.add_arc(ix, iy);
  }
  std::vector<int> independent_idx = greedy_independent_set(conflicts, r - 1);
  for (int ix : independent_idx) tr.independent.push_back(tr.survivors[ix]);

  auto touches_rows = [&](Vertex x, int ra, int rb) {
    return std::any_of(internal[x].begin(), internal[x].end(), [&](Vertex y) {
      return is_cell(y) && (row_of(y) == ra || row_of(y) == rb);
    });
  };
  std::size_t best = tr.independent.size() + 1;
  for (int q = 1; q <= s; ++q) {
    std::size_t size = std::count_if(tr.independent.begin(), tr.independent.end(),
                                     [&](Vertex x) { return touches_rows(x, q, m - q + 1); });
    if (size < best) {
      best = size;
      tr.pruned_row = q;
    }
  }
  const int q = tr.pruned_row;
  std::vector<int> selected_idx;
  for (int ix : independent_idx)
    if (!touches_rows(tr.survivors[ix], q, m - q + 1)) {
      selected_idx.push_back(ix);
      tr.selected.push_back(tr.survivors[ix]);
    }

  // branch sets in the contracted graph
  const int t = static_cast<int>(selected_idx.size());
  MinorModel model;
  model.pattern = share(complete_bipartite(3, t));
  model.branch_sets.assign(3 + t, {});
  auto& xs = model.branch_sets[0];
  auto& ys = model.branch_sets[1];
  auto& rs = model.branch_sets[2];
  for (int col = 1; col <= n; ++col) {
    if (column_side[col] == 1)
      for (int row = 1; row <= m - s; ++row) xs.push_back(grid.vertex(col, row));
    if (column_side[col] == 2)
      for (int row = s + 1; row <= m; ++row) ys.push_back(grid.vertex(col, row));
  }
  for (int col = 1; col <= n; ++col) {
    xs.push_back(grid.vertex(col, q));
    ys.push_back(grid.vertex(col, m - q + 1));
  }
  rs.push_back(alpha);
  for (int k = 0; k < t; ++k) {
    int ix = selected_idx[k];
    model.branch_sets[3 + k] = z_path[ix];
    // centre path up to its first cell of Z_x
    auto path = cp.path(tr.survivors[ix]);
    std::reverse(path.begin(), path.end());
    std::size_t j = 1;
    while (!(is_cell(path[j]) && z_index[path[j]] == ix)) ++j;
    rs.insert(rs.end(), path.begin(), path.begin() + static_cast<std::ptrdiff_t>(j));
  }
  for (auto& set : model.branch_sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  model.host = share(contracted);
  if (!find_rep_edges(model))
    fail(ErrorKind::Defect, "self-check", "assembled K_{3,t} branch sets miss an adjacency");

  out.model = lift_model(model, c, g);
  if (auto v = verify_minor_model(out.model); !v.empty())
    fail(ErrorKind::Defect, "self-check", "extracted K_{3,t} model failed verification: " + describe(v));
  out.t = t;
  if (t < out.guarantee.guaranteed)
    fail(ErrorKind::Defect, "guarantee", "extracted t = " + std::to_string(t) + " below the guarantee " +
                                             std::to_string(out.guarantee.guaranteed));
  return out;
}

long long k3t_grid_threshold(int t, int r) {
  if (t < 1 || r < 1) fail(ErrorKind::InvalidArgument, "parameter-range", "need t, r >= 1");
  return 4LL * r + isqrt_ceil(16LL * r * r * (t - 1));
}

long long genus_grid_threshold(int g, int r) {
  if (g < 0 || r < 1) fail(ErrorKind::InvalidArgument, "parameter-range", "need g >= 0 and r >= 1");
  return 4LL * r + isqrt_ceil(16LL * r * r * (2LL * g + 2));
}

int genus_to_k3t(int g) {
  if (g < 0) fail(ErrorKind::InvalidArgument, "parameter-range", "genus must be non-negative");
  return 2 * g + 3;
}

}  // namespace apexminor
