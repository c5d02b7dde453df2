#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "apexminor/bfs.hpp"
#include "apexminor/contraction.hpp"
#include "apexminor/minor_model.hpp"
#include "apexminor/models.hpp"

namespace apexminor {

/// Apex graph A with a distinguished vertex z; h = A - z with vertices above z
/// shifted down by one (h_to_a records the inverse map).
struct ApexInstance {
  GraphPtr a;
  Vertex z = 0;
  GraphPtr h;
  int d = 0;  // deg_A(z)
  int t = 0;  // |V(A)|
  std::vector<Vertex> h_to_a;

  static ApexInstance make(Graph a, Vertex z);

  /// N_A(z) expressed as vertices of h.
  std::vector<Vertex> apex_neighbors_in_h() const;
};

/// Block indexing of the 2kn x 2ln grid: block (a, b) with a in 1..2k, b in 1..2l
/// covers cells ((a-1)n + p, (b-1)n + q) for p, q in 1..n.
struct SubgridScheme {
  int k = 1;
  int l = 1;
  int n = 1;
  std::vector<int> offsets;  // m_{a,b}, row-major over the 2k x 2l blocks; may be empty

  GridSpec grid() const { return GridSpec{2 * k * n, 2 * l * n}; }
  GridSpec blocks() const { return GridSpec{2 * k, 2 * l}; }
  Vertex cell(int a, int b, int p, int q) const;
  int offset(int a, int b) const;
};

struct BarsAndCross {
  std::vector<Vertex> horizontal;  // {(a,b,p,i) : p = 1..n}
  std::vector<Vertex> vertical;    // {(a,b,i,p) : p = 1..n}
  std::vector<Vertex> cross;       // union, sorted
};

BarsAndCross bars_and_cross(const SubgridScheme& s, int a, int b, int i);

/// The model (C_u) of H in the 2kn x 2ln grid selected by s.offsets.
MinorModel candidate_model(const SubgridScheme& s, const DoubledModel& dm);

struct RiskPair {
  Vertex v;  // diagonal cell (a,b,i,i) of an anchor block, as a grid vertex
  Vertex x;  // internal vertex of P_v (an id of the graph the paths were computed on)
  Vertex u;  // pattern vertex whose anchor block contains v
  int i;
};

/// All pairs (v, x) with v on the diagonal of an anchor block of some u in
/// `apex_neighbors` and x in I_v. Grid cells must carry their grid ids in the
/// graph `cp` was computed on.
std::vector<RiskPair> risk_pairs(const SubgridScheme& s, const DoubledModel& dm, const CentrePaths& cp,
                                 const std::vector<Vertex>& apex_neighbors);

struct ApexConfig {
  std::uint64_t seed = 0;
  int max_trials = 0;            // 0 selects 8n
  std::optional<int> radius;     // defaults to the centre's eccentricity
};

struct ApexTrial {
  bool bad = false;
  std::vector<int> offsets;
  std::optional<MinorModel> model;  // model of A in the input graph when not bad
};

struct ApexExtraction {
  MinorModel model;
  int trials = 0;  // 1-based index of the successful trial
  int n = 0;
  int radius = 0;
  std::vector<int> offsets;
};

/// Prepared state for the randomized apex extraction; each trial is a pure
/// function of (inputs, seed, trial index).
class ApexExtractor {
 public:
  ApexExtractor(GraphPtr g, Vertex centre, const GridModel& grid_model, ApexInstance inst, const GridModel& h_model,
                std::optional<int> radius);

  ApexTrial trial(std::uint64_t seed, std::uint64_t index) const;

  const SubgridScheme& scheme() const { return scheme_; }
  const DoubledModel& doubled() const { return doubled_; }
  const CentrePaths& paths() const { return paths_; }
  const Contraction& contraction() const { return contraction_; }
  Vertex contracted_centre() const { return centre_; }
  int radius() const { return radius_; }
  std::vector<RiskPair> risk_set() const;

 private:
  GraphPtr g_;
  ApexInstance inst_;
  int radius_ = 0;
  SubgridScheme scheme_;
  DoubledModel doubled_;
  Contraction contraction_;
  Vertex centre_ = 0;
  CentrePaths paths_;
  GraphPtr grid_host_;
  std::vector<Vertex> apex_neighbors_;
};

/// Las Vegas extraction of an A-model from a large grid model in a graph of
/// bounded radius. Throws TrialsExhausted after cfg.max_trials bad trials.
ApexExtraction extract_apex(GraphPtr g, Vertex centre, const GridModel& grid_model, const ApexInstance& inst,
                            const GridModel& h_model, const ApexConfig& cfg);

/// Block size n = 4(r-1)d + 1.
int apex_block_size(int r, int d);

/// 16 r t d.
long long apex_grid_threshold(int r, int t, int d);

struct ApexGridSize {
  int n;
  long long rows;  // 2kn + 1
  long long cols;  // 2ln + 1
};

ApexGridSize apex_exact_grid(int r, int d, int k, int l);

/// (2t - 2)^r.
boost::multiprecision::cpp_int simple_threshold(int t, int r);

}  // namespace apexminor
