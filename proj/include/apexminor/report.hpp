#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace apexminor {

/// One row of an upper-vs-lower bound sweep.
struct ReportRow {
  std::string family;  // "genus" (param = g) or "k3t" (param = t)
  int r = 0;
  int param = 0;
  long long upper_threshold = 0;  // grid size forcing the minor
  long long lower_grid = 0;       // grid side of the lower-bound construction
  std::optional<int> achieved_t;  // from a seeded extraction at the upper threshold
};

struct SweepConfig {
  std::vector<int> rs;
  std::vector<int> params;
  bool extract = false;  // run extract_k3t on a threshold-sized fixture per row
  std::uint64_t seed = 1;
};

/// genus_grid_threshold(g, r) against (2r-1) floor(sqrt(g/2)).
std::vector<ReportRow> genus_sweep(const SweepConfig& cfg);

/// k3t_grid_threshold(t, r) against (2r-1)(ceil(sqrt((t-3)/6)) - 1).
std::vector<ReportRow> k3t_sweep(const SweepConfig& cfg);

/// Largest t extracted from the n x n grid plus an apex adjacent to the cells
/// (x, y) with 2r | x and (2r-1) | y, which puts every base cell within r.
int achieved_k3t(int n, int r, std::uint64_t seed);

/// CSV with header family,r,param,upper_threshold,lower_grid,achieved_t.
void emit_report(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace apexminor
