#include "apexminor/report.hpp"

#include <ostream>

#include "apexminor/constructions.hpp"
#include "apexminor/int_math.hpp"
#include "apexminor/k3t.hpp"

namespace apexminor {

int achieved_k3t(int n, int r, std::uint64_t seed) {
  auto [grid_graph, grid] = make_grid(n, n);
  std::vector<Vertex> hubs;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (x % (2 * r) == 0 && y % (2 * r - 1) == 0) hubs.push_back(grid.vertex(x, y));
  GraphPtr g = share(add_apex(grid_graph, hubs));
  GridModel gm = identity_grid_model(g, grid);
  return extract_k3t(g, grid.size(), r, gm, K3tConfig{seed, 64}).t;
}

std::vector<ReportRow> genus_sweep(const SweepConfig& cfg) {
  std::vector<ReportRow> rows;
  for (int g : cfg.params)
    for (int r : cfg.rs) {
      ReportRow row{"genus", r, g, genus_grid_threshold(g, r), lower_bound_params_genus(g, r).n, std::nullopt};
      if (cfg.extract) row.achieved_t = achieved_k3t(static_cast<int>(row.upper_threshold), r, cfg.seed);
      rows.push_back(row);
    }
  return rows;
}

std::vector<ReportRow> k3t_sweep(const SweepConfig& cfg) {
  std::vector<ReportRow> rows;
  for (int t : cfg.params)
    for (int r : cfg.rs) {
      ReportRow row{"k3t", r, t, k3t_grid_threshold(t, r), apex_lb_params(t, r).n, std::nullopt};
      if (cfg.extract) row.achieved_t = achieved_k3t(static_cast<int>(row.upper_threshold), r, cfg.seed);
      rows.push_back(row);
    }
  return rows;
}

void emit_report(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "family,r,param,upper_threshold,lower_grid,achieved_t\n";
  for (const auto& row : rows) {
    out << row.family << ',' << row.r << ',' << row.param << ',' << row.upper_threshold << ',' << row.lower_grid
        << ',';
    if (row.achieved_t) out << *row.achieved_t;
    out << '\n';
  }
}

}  // namespace apexminor
