#pragma once

#include <span>
#include <vector>

#include "apexminor/graph.hpp"

namespace apexminor {

struct Contraction {
  Graph graph;
  std::vector<Vertex> image;                 // old vertex -> new vertex
  std::vector<std::vector<Vertex>> preimage;  // new vertex -> sorted old vertices
};

/// Contracts each listed part to one vertex. Part i becomes new vertex i; vertices
/// outside every part follow as singletons in ascending id order. The result is
/// simple (parallel edges merged, loops dropped).
///
/// Throws InvalidArgument ("overlapping-parts") or Precondition ("disconnected-part").
Contraction contract_partition(const Graph& g, std::span<const std::vector<Vertex>> parts);

}  // namespace apexminor
