#pragma once

#include <cstdint>
#include <vector>

#include "apexminor/bfs.hpp"
#include "apexminor/contraction.hpp"
#include "apexminor/minor_model.hpp"

namespace apexminor {

/// Exact value of (n-4r+2)(m-4r+2) / (8r(2r-1)) in lowest terms, plus the
/// integer size the extraction guarantees (0 unless n, m > 2(2r-1)).
struct K3tGuarantee {
  long long numerator = 0;
  long long denominator = 1;
  long long guaranteed = 0;
};

K3tGuarantee k3t_guarantee(int n, int m, int r);

/// Iterated minimum-degree greedy on the underlying undirected graph. Result is
/// sorted and has size >= |V| / (2 cap + 1). Throws InvalidArgument
/// ("out-degree") naming a vertex whose out-degree exceeds cap.
std::vector<Vertex> greedy_independent_set(const Digraph& q, int cap);

struct K3tConfig {
  std::uint64_t seed = 0;
  int max_trials = 64;
};

/// Intermediate sets of one extraction run, in grid coordinates of the n x m
/// grid model (grid vertex ids, row-major).
struct K3tTrace {
  int s = 0;
  int p = 0;
  std::vector<int> columns;  // a_1..a_{p+1}
  int column_trials = 0;     // samples drawn until |A'| > |A|/2
  std::vector<Vertex> base;  // A
  std::vector<Vertex> survivors;    // A'
  std::vector<Vertex> independent;  // A''
  int pruned_row = 0;               // q
  std::vector<Vertex> selected;     // A'''
};

struct K3tExtraction {
  MinorModel model;  // pattern K_{3,t}: 0 = X', 1 = Y', 2 = R, 3.. = Z_x
  int t = 0;
  K3tGuarantee guarantee;
  K3tTrace trace;
};

/// Extracts a K_{3,t} model from an n x m grid model that avoids the centre.
/// Every base-set cell must lie within distance r of the centre after the
/// grid cells are contracted (implied by ecc(centre) <= r).
K3tExtraction extract_k3t(GraphPtr g, Vertex centre, int r, const GridModel& grid_model, const K3tConfig& cfg);

/// ceil(4r(1 + sqrt(t-1))), exact.
long long k3t_grid_threshold(int t, int r);

/// ceil(4r(1 + sqrt(2g+2))), exact.
long long genus_grid_threshold(int g, int r);

/// 2g + 3.
int genus_to_k3t(int g);

}  // namespace apexminor
