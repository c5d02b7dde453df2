#include "apexminor/apex.hpp"

#include <algorithm>
#include <string>

#include "apexminor/error.hpp"
#include "apexminor/rng.hpp"

namespace apexminor {

ApexInstance ApexInstance::make(Graph a, Vertex z) {
  if (!a.has_vertex(z)) fail(ErrorKind::InvalidArgument, "apex-vertex", "apex vertex not in A");
  ApexInstance inst;
  inst.z = z;
  inst.d = a.degree(z);
  inst.t = a.vertex_count();
  inst.h = share(delete_vertex(a, z));
  for (Vertex w = 0; w < a.vertex_count(); ++w)
    if (w != z) inst.h_to_a.push_back(w);
  inst.a = share(std::move(a));
  return inst;
}

std::vector<Vertex> ApexInstance::apex_neighbors_in_h() const {
  std::vector<Vertex> out;
  for (Vertex w : a->neighbors(z)) out.push_back(w > z ? w - 1 : w);
  return out;
}

Vertex SubgridScheme::cell(int a, int b, int p, int q) const {
  if (a < 1 || a > 2 * k || b < 1 || b > 2 * l || p < 1 || p > n || q < 1 || q > n)
    fail(ErrorKind::InvalidArgument, "subgrid-index",
         "subgrid index (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(p) + "," +
             std::to_string(q) + ") out of range");
  return grid().vertex((a - 1) * n + p, (b - 1) * n + q);
}

int SubgridScheme::offset(int a, int b) const {
  if (offsets.size() != static_cast<std::size_t>(blocks().size()))
    fail(ErrorKind::InvalidArgument, "offsets", "offsets not set for every block");
  int m = offsets[blocks().vertex(a, b)];
  if (m < 1 || m > n) fail(ErrorKind::InvalidArgument, "offsets", "offset outside 1..n");
  return m;
}

namespace {

void append_horizontal(const SubgridScheme& s, int a, int b, int i, std::vector<Vertex>& out) {
  for (int p = 1; p <= s.n; ++p) out.push_back(s.cell(a, b, p, i));
}

void append_vertical(const SubgridScheme& s, int a, int b, int i, std::vector<Vertex>& out) {
  for (int p = 1; p <= s.n; ++p) out.push_back(s.cell(a, b, i, p));
}

MinorModel assemble_candidate(const SubgridScheme& s, const DoubledModel& dm, GraphPtr grid_host) {
  const GridSpec blocks = s.blocks();
  if (!(dm.grid == blocks))
    fail(ErrorKind::InvalidArgument, "scheme-mismatch", "doubled model grid differs from the block grid");

  std::vector<Vertex> block_owner(blocks.size(), -1);
  for (std::size_t u = 0; u < dm.model.branch_sets.size(); ++u)
    for (Vertex c : dm.model.branch_sets[u]) block_owner[c] = static_cast<Vertex>(u);

  MinorModel out;
  out.host = std::move(grid_host);
  out.pattern = dm.model.pattern;
  out.branch_sets.assign(dm.model.branch_sets.size(), {});

  for (std::size_t u = 0; u < dm.model.branch_sets.size(); ++u) {
    auto& set = out.branch_sets[u];
    for (Vertex c : dm.model.branch_sets[u]) {
      auto [a, b] = blocks.coord(c);
      int m = s.offset(a, b);
      append_horizontal(s, a, b, m, set);
      append_vertical(s, a, b, m, set);
      // bars towards neighbouring blocks of the same branch set
      if (a < blocks.rows && block_owner[blocks.vertex(a + 1, b)] == static_cast<Vertex>(u))
        append_horizontal(s, a, b, s.offset(a + 1, b), set);
      if (b < blocks.cols && block_owner[blocks.vertex(a, b + 1)] == static_cast<Vertex>(u))
        append_vertical(s, a, b, s.offset(a, b + 1), set);
    }
  }

  out.rep_edges.reserve(dm.model.rep_edges.size());
  for (auto [first, second] : dm.model.rep_edges) {
    auto c1 = blocks.coord(first);
    auto c2 = blocks.coord(second);
    auto [a, b] = std::min(c1, c2);
    Vertex lower_owner = block_owner[blocks.vertex(a, b)];
    Edge e;
    if (c1.second == c2.second) {
      int m = s.offset(a + 1, b);
      append_horizontal(s, a, b, m, out.branch_sets[lower_owner]);
      e = {s.cell(a, b, s.n, m), s.cell(a + 1, b, 1, m)};
    } else {
      int m = s.offset(a, b + 1);
      append_vertical(s, a, b, m, out.branch_sets[lower_owner]);
      e = {s.cell(a, b, m, s.n), s.cell(a, b + 1, m, 1)};
    }
    out.rep_edges.push_back(c1 < c2 ? e : Edge{e.second, e.first});
  }

  for (auto& set : out.branch_sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  return out;
}

}  // namespace

BarsAndCross bars_and_cross(const SubgridScheme& s, int a, int b, int i) {
  BarsAndCross out;
  append_horizontal(s, a, b, i, out.horizontal);
  append_vertical(s, a, b, i, out.vertical);
  out.cross = out.horizontal;
  out.cross.insert(out.cross.end(), out.vertical.begin(), out.vertical.end());
  std::sort(out.cross.begin(), out.cross.end());
  out.cross.erase(std::unique(out.cross.begin(), out.cross.end()), out.cross.end());
  return out;
}

MinorModel candidate_model(const SubgridScheme& s, const DoubledModel& dm) {
  GridSpec g = s.grid();
  return assemble_candidate(s, dm, share(make_grid(g.rows, g.cols).first));
}

std::vector<RiskPair> risk_pairs(const SubgridScheme& s, const DoubledModel& dm, const CentrePaths& cp,
                                 const std::vector<Vertex>& apex_neighbors) {
  std::vector<RiskPair> out;
  for (Vertex u : apex_neighbors) {
    if (u < 0 || u >= static_cast<Vertex>(dm.anchors.size()))
      fail(ErrorKind::InvalidArgument, "anchor-missing", "no anchor for pattern vertex " + std::to_string(u));
    auto [a, b] = dm.grid.coord(dm.anchors[u]);
    for (int i = 1; i <= s.n; ++i) {
      Vertex v = s.cell(a, b, i, i);
      for (Vertex x : cp.internal(v)) out.push_back({v, x, u, i});
    }
  }
  return out;
}

int apex_block_size(int r, int d) {
  if (r < 1 || d < 0) fail(ErrorKind::InvalidArgument, "parameter-range", "need r >= 1 and d >= 0");
  return 4 * (r - 1) * d + 1;
}

long long apex_grid_threshold(int r, int t, int d) {
  if (r < 1 || t < 2 || d < 1 || d > t - 1)
    fail(ErrorKind::InvalidArgument, "parameter-range", "need r >= 1, t >= 2 and 1 <= d <= t - 1");
  return 16LL * r * t * d;
}

ApexGridSize apex_exact_grid(int r, int d, int k, int l) {
  if (k < 1 || l < 1) fail(ErrorKind::InvalidArgument, "parameter-range", "need k, l >= 1");
  int n = apex_block_size(r, d);
  return {n, 2LL * k * n + 1, 2LL * l * n + 1};
}

boost::multiprecision::cpp_int simple_threshold(int t, int r) {
  if (t < 2 || r < 0) fail(ErrorKind::InvalidArgument, "parameter-range", "need t >= 2 and r >= 0");
  return boost::multiprecision::pow(boost::multiprecision::cpp_int(2 * t - 2), static_cast<unsigned>(r));
}

ApexExtractor::ApexExtractor(GraphPtr g, Vertex centre, const GridModel& grid_model, ApexInstance inst,
                             const GridModel& h_model, std::optional<int> radius)
    : g_(std::move(g)), inst_(std::move(inst)) {
  const Graph& host = *g_;
  if (!host.has_vertex(centre)) fail(ErrorKind::InvalidArgument, "vertex-range", "centre not in graph");
  if (!(*h_model.model.pattern == *inst_.h))
    fail(ErrorKind::InvalidArgument, "h-model-pattern", "H-model pattern differs from A minus the apex vertex");

  auto dist = bfs_distances(host, centre);
  int ecc = 0;
  for (Vertex v = 0; v < host.vertex_count(); ++v) {
    if (dist[v] < 0)
      fail(ErrorKind::Precondition, "disconnected", "vertex " + std::to_string(v) + " unreachable from the centre");
    ecc = std::max(ecc, dist[v]);
  }
  radius_ = radius.value_or(ecc);
  if (radius_ < 1) fail(ErrorKind::Precondition, "radius", "radius bound must be at least 1");
  if (ecc > radius_) {
    Vertex witness = static_cast<Vertex>(std::find_if(dist.begin(), dist.end(), [&](int x) { return x > radius_; }) -
                                         dist.begin());
    fail(ErrorKind::Precondition, "radius",
         "vertex " + std::to_string(witness) + " is at distance " + std::to_string(dist[witness]) +
             " from the centre, above the radius bound " + std::to_string(radius_));
  }

  scheme_.k = h_model.grid.rows;
  scheme_.l = h_model.grid.cols;
  scheme_.n = apex_block_size(radius_, inst_.d);
  const long long need_rows = 2LL * scheme_.k * scheme_.n + 1;
  const long long need_cols = 2LL * scheme_.l * scheme_.n + 1;
  if (grid_model.grid.rows < need_rows || grid_model.grid.cols < need_cols)
    fail(ErrorKind::Precondition, "dimension",
         "grid model is " + std::to_string(grid_model.grid.rows) + "x" + std::to_string(grid_model.grid.cols) +
             ", need at least " + std::to_string(need_rows) + "x" + std::to_string(need_cols) +
             " for n = " + std::to_string(scheme_.n));
  if (!grid_model.model.host || !(*grid_model.model.host == host))
    fail(ErrorKind::InvalidArgument, "host-mismatch", "grid model lives in a different graph");
  if (auto v = verify_minor_model(grid_model.model); !v.empty())
    fail(ErrorKind::InvalidArgument, "invalid-model", "grid model: " + describe(v));

  const GridSpec big = scheme_.grid();
  GridModel avoiding = crop_grid_model(shrink_grid_model_avoiding(grid_model, centre), big.rows, big.cols);
  contraction_ = contract_partition(host, avoiding.model.branch_sets);
  centre_ = contraction_.image[centre];
  paths_ = centre_paths(contraction_.graph, centre_);
  doubled_ = double_model(h_model.model, h_model.grid);
  grid_host_ = share(make_grid(big.rows, big.cols).first);
  apex_neighbors_ = inst_.apex_neighbors_in_h();
}

std::vector<RiskPair> ApexExtractor::risk_set() const {
  return risk_pairs(scheme_, doubled_, paths_, apex_neighbors_);
}

ApexTrial ApexExtractor::trial(std::uint64_t seed, std::uint64_t index) const {
  ApexTrial out;
  SubgridScheme s = scheme_;
  TrialRng rng(trial_seed(seed, index));
  s.offsets.resize(s.blocks().size());
  for (int& m : s.offsets) m = rng.uniform(1, s.n);
  out.offsets = s.offsets;

  MinorModel cand = assemble_candidate(s, doubled_, grid_host_);
  const Graph& contracted = contraction_.graph;
  std::vector<Vertex> owner(contracted.vertex_count(), -1);
  for (std::size_t u = 0; u < cand.branch_sets.size(); ++u)
    for (Vertex c : cand.branch_sets[u]) owner[c] = static_cast<Vertex>(u);

  // bad pair: the sampled diagonal cell's centre path runs through another branch set
  std::vector<Vertex> anchor_cell(doubled_.anchors.size(), -1);
  for (Vertex u : apex_neighbors_) {
    auto [a, b] = doubled_.grid.coord(doubled_.anchors[u]);
    int m = s.offset(a, b);
    anchor_cell[u] = s.cell(a, b, m, m);
    for (Vertex x : paths_.internal(anchor_cell[u]))
      if (owner[x] != -1 && owner[x] != u) {
        out.bad = true;
        return out;
      }
  }

  const Graph& a_graph = *inst_.a;
  const Vertex z = inst_.z;
  MinorModel m;
  m.host = nullptr;
  m.pattern = inst_.a;
  m.branch_sets.assign(a_graph.vertex_count(), {});
  for (std::size_t w = 0; w < cand.branch_sets.size(); ++w) m.branch_sets[inst_.h_to_a[w]] = cand.branch_sets[w];

  // C_z: for each neighbour u, the centre path from alpha up to its first entry into C_u
  auto& cz = m.branch_sets[z];
  cz.push_back(centre_);
  std::vector<Edge> z_edge(doubled_.anchors.size(), Edge{-1, -1});
  for (Vertex u : apex_neighbors_) {
    auto path = paths_.path(anchor_cell[u]);
    std::reverse(path.begin(), path.end());
    std::size_t j = 1;
    while (owner[path[j]] == -1) ++j;
    if (owner[path[j]] != u) fail(ErrorKind::Defect, "apex-path", "centre path entered a foreign branch set");
    cz.insert(cz.end(), path.begin(), path.begin() + static_cast<std::ptrdiff_t>(j));
    z_edge[u] = {path[j - 1], path[j]};
  }
  std::sort(cz.begin(), cz.end());
  cz.erase(std::unique(cz.begin(), cz.end()), cz.end());

  m.rep_edges.reserve(a_graph.edge_count());
  for (auto [p, q] : a_graph.edges()) {
    if (p == z || q == z) {
      Vertex other = p == z ? q : p;
      Edge e = z_edge[other > z ? other - 1 : other];
      m.rep_edges.push_back(p == z ? e : Edge{e.second, e.first});
    } else {
      Vertex hp = p > z ? p - 1 : p;
      Vertex hq = q > z ? q - 1 : q;
      m.rep_edges.push_back(cand.rep_edges[inst_.h->edge_index(hp, hq)]);
    }
  }

  MinorModel lifted = lift_model(m, contraction_, g_);
  if (auto v = verify_minor_model(lifted); !v.empty())
    fail(ErrorKind::Defect, "self-check", "extracted apex model failed verification: " + describe(v));
  out.model = std::move(lifted);
  return out;
}

ApexExtraction extract_apex(GraphPtr g, Vertex centre, const GridModel& grid_model, const ApexInstance& inst,
                            const GridModel& h_model, const ApexConfig& cfg) {
  ApexExtractor extractor(std::move(g), centre, grid_model, inst, h_model, cfg.radius);
  const int n = extractor.scheme().n;
  const int max_trials = cfg.max_trials > 0 ? cfg.max_trials : 8 * n;
  for (int i = 1; i <= max_trials; ++i) {
    ApexTrial t = extractor.trial(cfg.seed, static_cast<std::uint64_t>(i));
    if (!t.bad) return ApexExtraction{std::move(*t.model), i, n, extractor.radius(), std::move(t.offsets)};
  }
  fail(ErrorKind::TrialsExhausted, "trials-exhausted",
       "every one of " + std::to_string(max_trials) + " trials hit a bad risk pair");
}

}  // namespace apexminor
