#include "apexminor/minor_model.hpp"

#include <algorithm>

#include "apexminor/error.hpp"

namespace apexminor {

namespace {

std::string edge_name(Edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

// A host edge between the two vertex sets, scanning from the smaller side.
std::optional<Edge> edge_between(const Graph& host, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                                 const std::vector<Vertex>& owner, Vertex owner_b) {
  bool forward = a.size() <= b.size();
  const auto& scan = forward ? a : b;
  for (Vertex x : scan)
    for (Vertex y : host.neighbors(x)) {
      bool hit = forward ? owner[y] == owner_b : std::binary_search(a.begin(), a.end(), y);
      if (hit) return forward ? Edge{x, y} : Edge{y, x};
    }
  return std::nullopt;
}

}  // namespace

std::vector<Vertex> MinorModel::owners() const {
  std::vector<Vertex> owner(host->vertex_count(), -1);
  for (std::size_t u = 0; u < branch_sets.size(); ++u)
    for (Vertex v : branch_sets[u])
      if (host->has_vertex(v)) owner[v] = static_cast<Vertex>(u);
  return owner;
}

std::vector<Violation> verify_minor_model(const MinorModel& m) {
  std::vector<Violation> out;
  if (!m.host || !m.pattern) {
    out.push_back({"shape", "host or pattern missing"});
    return out;
  }
  const Graph& host = *m.host;
  const Graph& pattern = *m.pattern;
  if (static_cast<int>(m.branch_sets.size()) != pattern.vertex_count()) {
    out.push_back({"shape", "expected " + std::to_string(pattern.vertex_count()) + " branch sets, got " +
                                std::to_string(m.branch_sets.size())});
    return out;
  }
  if (static_cast<int>(m.rep_edges.size()) != pattern.edge_count()) {
    out.push_back({"shape", "expected " + std::to_string(pattern.edge_count()) + " representing edges, got " +
                                std::to_string(m.rep_edges.size())});
  }

  std::vector<Vertex> owner(host.vertex_count(), -1);
  for (int u = 0; u < pattern.vertex_count(); ++u) {
    const auto& set = m.branch_sets[u];
    if (set.empty()) {
      out.push_back({"empty", "branch set " + std::to_string(u) + " is empty"});
      continue;
    }
    bool in_range = true;
    for (Vertex v : set) {
      if (!host.has_vertex(v)) {
        out.push_back({"range", "branch set " + std::to_string(u) + " has out-of-range vertex " + std::to_string(v)});
        in_range = false;
        continue;
      }
      if (owner[v] != -1 && owner[v] != u)
        out.push_back({"disjointness", "branch sets " + std::to_string(owner[v]) + " and " + std::to_string(u) +
                                           " share host vertex " + std::to_string(v)});
      else if (owner[v] == u)
        out.push_back({"disjointness", "branch set " + std::to_string(u) + " lists vertex " + std::to_string(v) +
                                           " twice"});
      owner[v] = u;
    }
    if (in_range && !induces_connected(host, set))
      out.push_back({"connectivity", "branch set " + std::to_string(u) + " is not connected"});
  }

  std::size_t checked = std::min(m.rep_edges.size(), pattern.edges().size());
  for (std::size_t i = 0; i < checked; ++i) {
    auto [u, v] = pattern.edges()[i];
    auto [a, b] = m.rep_edges[i];
    std::string name = "pattern edge " + edge_name({u, v}) + " (host " + edge_name({a, b}) + ")";
    if (!host.has_edge(a, b)) {
      out.push_back({"representation", name + ": not a host edge"});
      continue;
    }
    auto in = [&](Vertex x, Vertex w) { return host.has_vertex(x) && owner[x] == w; };
    if (!((in(a, u) && in(b, v)) || (in(a, v) && in(b, u))))
      out.push_back({"representation", name + ": endpoints not in the two branch sets"});
  }
  return out;
}

bool find_rep_edges(MinorModel& m) {
  auto owner = m.owners();
  m.rep_edges.assign(m.pattern->edge_count(), Edge{-1, -1});
  bool ok = true;
  for (int i = 0; i < m.pattern->edge_count(); ++i) {
    auto [u, v] = m.pattern->edges()[i];
    auto e = edge_between(*m.host, m.branch_sets[u], m.branch_sets[v], owner, v);
    if (e) m.rep_edges[i] = *e;
    else ok = false;
  }
  return ok;
}

GridModel identity_grid_model(GraphPtr host, const GridSpec& grid) {
  if (grid.size() > host->vertex_count())
    fail(ErrorKind::InvalidArgument, "grid-dimension", "grid larger than host");
  std::vector<std::vector<Vertex>> cells(grid.size());
  for (Vertex v = 0; v < grid.size(); ++v) cells[v] = {v};
  return grid_model_from_cells(std::move(host), grid, std::move(cells));
}

GridModel grid_model_from_cells(GraphPtr host, const GridSpec& grid, std::vector<std::vector<Vertex>> cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  GridModel out{MinorModel{std::move(host), share(make_grid(grid.rows, grid.cols).first), std::move(cells), {}}, grid};
  if (!find_rep_edges(out.model))
    fail(ErrorKind::Defect, "missing-representative", "grid model has adjacent cells with no host edge between them");
  return out;
}

MinorModel lift_model(const MinorModel& contracted, const Contraction& c, GraphPtr original_host) {
  MinorModel out;
  out.host = std::move(original_host);
  out.pattern = contracted.pattern;
  out.branch_sets.reserve(contracted.branch_sets.size());
  for (const auto& set : contracted.branch_sets) {
    std::vector<Vertex> lifted;
    for (Vertex p : set) lifted.insert(lifted.end(), c.preimage[p].begin(), c.preimage[p].end());
    std::sort(lifted.begin(), lifted.end());
    out.branch_sets.push_back(std::move(lifted));
  }
  out.rep_edges.reserve(contracted.rep_edges.size());
  for (auto [p, q] : contracted.rep_edges) {
    const auto& side = c.preimage[p].size() <= c.preimage[q].size() ? c.preimage[p] : c.preimage[q];
    Vertex target = &side == &c.preimage[p] ? q : p;
    Edge found{-1, -1};
    for (Vertex x : side) {
      for (Vertex y : out.host->neighbors(x))
        if (c.image[y] == target) {
          found = &side == &c.preimage[p] ? Edge{x, y} : Edge{y, x};
          break;
        }
      if (found.first != -1) break;
    }
    if (found.first == -1)
      fail(ErrorKind::Defect, "lift", "contracted edge " + edge_name({p, q}) + " has no preimage edge");
    out.rep_edges.push_back(found);
  }
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.kind + ": " + v.detail;
  }
  return s.empty() ? "ok" : s;
}

}  // namespace apexminor
