#include "apexminor/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "apexminor/error.hpp"

namespace apexminor {

// ---------------------------------------------------------------- treewidth

namespace {

using Mask = std::uint32_t;

// Vertices outside S + v reachable from v through S: the neighbourhood v has
// once every vertex of S has been eliminated.
Mask eliminated_neighbourhood(const std::vector<Mask>& adj, Mask s, int v) {
  Mask reach = Mask{1} << v;
  Mask border = adj[v];
  for (;;) {
    Mask grow = border & s & ~reach;
    if (!grow) break;
    reach |= grow;
    for (Mask b = grow; b; b &= b - 1) border |= adj[std::countr_zero(b)];
  }
  return border & ~s & ~(Mask{1} << v);
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, const OracleLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.max_tw_vertices || n > 28)
    fail(ErrorKind::LimitExceeded, "tw-size",
         "exact treewidth limited to " + std::to_string(std::min(limits.max_tw_vertices, 28)) + " vertices, got " +
             std::to_string(n));
  TreewidthResult out;
  if (n == 0) {
    out.decomposition = TreeDecomposition::path({{}});
    return out;
  }

  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }

  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<std::int8_t> best(static_cast<std::size_t>(full) + 1, 0);
  best[0] = -1;
  auto cost = [&](Mask s, int v) -> int {
    Mask rest = s & ~(Mask{1} << v);
    return std::max<int>(best[rest], std::popcount(eliminated_neighbourhood(adj, rest, v)));
  };
  for (Mask s = 1; s <= full && s != 0; ++s) {
    int value = n;
    for (Mask b = s; b; b &= b - 1) value = std::min(value, cost(s, std::countr_zero(b)));
    best[s] = static_cast<std::int8_t>(value);
    if (s == full) break;
  }
  out.width = best[full];

  // recover an optimal elimination order, last vertex first
  out.elimination_order.assign(n, -1);
  Mask s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    for (Mask b = s; b; b &= b - 1) {
      int v = std::countr_zero(b);
      if (cost(s, v) == best[s]) {
        out.elimination_order[pos] = v;
        s &= ~(Mask{1} << v);
        break;
      }
    }
  }

  // elimination game: bag of v = v plus its later neighbours in the filled graph
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[out.elimination_order[i]] = i;
  std::vector<Mask> filled = adj;
  std::vector<std::vector<Vertex>> bags(n);
  std::vector<Edge> tree_edges;
  Mask eliminated = 0;
  for (int i = 0; i < n; ++i) {
    int v = out.elimination_order[i];
    Mask later = filled[v] & ~eliminated & ~(Mask{1} << v);
    bags[i].push_back(v);
    int parent = -1;
    for (Mask b = later; b; b &= b - 1) {
      int w = std::countr_zero(b);
      bags[i].push_back(w);
      filled[w] |= later & ~(Mask{1} << w);
      if (parent == -1 || position[w] < parent) parent = position[w];
    }
    if (parent == -1 && i + 1 < n) parent = i + 1;
    if (parent != -1) tree_edges.emplace_back(i, parent);
    eliminated |= Mask{1} << v;
    std::sort(bags[i].begin(), bags[i].end());
  }
  out.decomposition = TreeDecomposition{std::move(bags), Graph(n, tree_edges)};
  if (out.decomposition.width() != out.width)
    fail(ErrorKind::Defect, "tw-witness", "elimination witness width differs from the DP optimum");
  return out;
}

// ---------------------------------------------------------------- minors

namespace {

using HostMask = std::uint64_t;

class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h, std::chrono::milliseconds budget)
      : h_(h), deadline_(std::chrono::steady_clock::now() + budget) {
    const int n = g.vertex_count();
    // host vertices relabelled by degree descending so roots start at hubs
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order_[i]] = i;
    adj_.assign(n, 0);
    for (auto [u, v] : g.edges()) {
      adj_[rank[u]] |= HostMask{1} << rank[v];
      adj_[rank[v]] |= HostMask{1} << rank[u];
    }
    host_n_ = n;

    // pattern order: degree descending, then most already-placed neighbours
    const int k = h.vertex_count();
    std::vector<char> taken(k, 0);
    for (int step = 0; step < k; ++step) {
      int pick = -1, pick_placed = -1;
      for (int u = 0; u < k; ++u) {
        if (taken[u]) continue;
        int placed = 0;
        for (Vertex w : h.neighbors(u)) placed += taken[w];
        if (pick == -1 || placed > pick_placed || (placed == pick_placed && h.degree(u) > h.degree(pick))) {
          pick = u;
          pick_placed = placed;
        }
      }
      taken[pick] = 1;
      pattern_order_.push_back(pick);
    }
    branch_.assign(k, 0);
    placed_.assign(k, 0);
  }

  bool run() { return place(0, 0); }

  std::vector<std::vector<Vertex>> branch_sets() const {
    std::vector<std::vector<Vertex>> out(branch_.size());
    for (std::size_t u = 0; u < branch_.size(); ++u) {
      for (HostMask b = branch_[u]; b; b &= b - 1) out[u].push_back(order_[std::countr_zero(b)]);
      std::sort(out[u].begin(), out[u].end());
    }
    return out;
  }

 private:
  HostMask neighbourhood(HostMask s) const {
    HostMask out = 0;
    for (HostMask b = s; b; b &= b - 1) out |= adj_[std::countr_zero(b)];
    return out & ~s;
  }

  void tick() {
    if ((++nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_)
      fail(ErrorKind::LimitExceeded, "minor-budget", "minor search exceeded its time budget");
  }

  // every placed vertex still owing an edge to an unplaced neighbour needs free room next to it
  bool feasible(HostMask used) const {
    const int free = host_n_ - std::popcount(used);
    const int remaining = static_cast<int>(pattern_order_.size()) - placed_count_;
    if (free < remaining) return false;
    for (int u = 0; u < static_cast<int>(branch_.size()); ++u) {
      if (!placed_[u]) continue;
      bool owes = false;
      for (Vertex w : h_.neighbors(u)) owes |= !placed_[w];
      if (owes && (neighbourhood(branch_[u]) & ~used) == 0) return false;
    }
    return true;
  }

  bool place(int step, HostMask used) {
    if (step == static_cast<int>(pattern_order_.size())) return true;
    const Vertex u = pattern_order_[step];
    const int remaining_after = static_cast<int>(pattern_order_.size()) - step - 1;
    const int max_size = host_n_ - std::popcount(used) - remaining_after;
    for (int root = 0; root < host_n_; ++root) {
      HostMask bit = HostMask{1} << root;
      if (used & bit) continue;
      HostMask below = bit - 1;
      HostMask excluded = used | below;
      if (grow(step, u, used, bit, adj_[root] & ~excluded, excluded, max_size)) return true;
    }
    return false;
  }

  bool accept(int step, Vertex u, HostMask used, HostMask set) {
    HostMask around = neighbourhood(set);
    for (Vertex w : h_.neighbors(u))
      if (placed_[w] && (branch_[w] & around) == 0) return false;
    branch_[u] = set;
    placed_[u] = 1;
    ++placed_count_;
    HostMask now = used | set;
    if (feasible(now) && place(step + 1, now)) return true;
    placed_[u] = 0;
    --placed_count_;
    branch_[u] = 0;
    return false;
  }

  bool grow(int step, Vertex u, HostMask used, HostMask set, HostMask ext, HostMask excluded, int max_size) {
    tick();
    if (accept(step, u, used, set)) return true;
    if (std::popcount(set) >= max_size) return false;
    while (ext) {
      int v = std::countr_zero(ext);
      HostMask bit = HostMask{1} << v;
      ext &= ~bit;
      HostMask next_ext = (ext | adj_[v]) & ~set & ~excluded & ~bit;
      if (grow(step, u, used, set | bit, next_ext, excluded, max_size)) return true;
      excluded |= bit;
    }
    return false;
  }

  const Graph& h_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Vertex> order_;
  std::vector<HostMask> adj_;
  int host_n_ = 0;
  std::vector<Vertex> pattern_order_;
  std::vector<HostMask> branch_;
  std::vector<char> placed_;
  int placed_count_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<MinorModel> minor_test(GraphPtr g, GraphPtr h, const OracleLimits& limits) {
  if (h->vertex_count() > limits.max_minor_pattern)
    fail(ErrorKind::LimitExceeded, "minor-pattern-size",
         "pattern has " + std::to_string(h->vertex_count()) + " vertices, limit " +
             std::to_string(limits.max_minor_pattern));
  if (g->vertex_count() > std::min(limits.max_minor_host, 64))
    fail(ErrorKind::LimitExceeded, "minor-host-size",
         "host has " + std::to_string(g->vertex_count()) + " vertices, limit " +
             std::to_string(std::min(limits.max_minor_host, 64)));

  MinorModel model{g, h, {}, {}};
  if (h->vertex_count() == 0) return model;
  if (h->vertex_count() > g->vertex_count() || h->edge_count() > g->edge_count()) return std::nullopt;
  // minors of planar graphs are planar
  if (!planarity_test(*h) && planarity_test(*g)) return std::nullopt;

  MinorSearch search(*g, *h, limits.time_budget);
  if (!search.run()) return std::nullopt;
  model.branch_sets = search.branch_sets();
  if (!find_rep_edges(model) || !is_valid(model))
    fail(ErrorKind::Defect, "minor-witness", "minor search produced an invalid model");
  return model;
}

// ---------------------------------------------------------------- planarity

bool planarity_test(const Graph& g) {
  const long n = g.vertex_count();
  const long m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace apexminor
