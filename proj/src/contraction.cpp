#include "apexminor/contraction.hpp"

#include <algorithm>
#include <string>

#include "apexminor/error.hpp"

namespace apexminor {

Contraction contract_partition(const Graph& g, std::span<const std::vector<Vertex>> parts) {
  Contraction out;
  out.image.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) fail(ErrorKind::InvalidArgument, "empty-part", "part " + std::to_string(i) + " is empty");
    for (Vertex v : parts[i]) {
      if (!g.has_vertex(v)) fail(ErrorKind::InvalidArgument, "vertex-range", "part vertex out of range");
      if (out.image[v] != -1)
        fail(ErrorKind::InvalidArgument, "overlapping-parts",
             "vertex " + std::to_string(v) + " appears in parts " + std::to_string(out.image[v]) + " and " +
                 std::to_string(i));
      out.image[v] = static_cast<Vertex>(i);
    }
    if (!induces_connected(g, parts[i]))
      fail(ErrorKind::Precondition, "disconnected-part", "part " + std::to_string(i) + " is not connected");
  }
  int next = static_cast<int>(parts.size());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (out.image[v] == -1) out.image[v] = next++;

  out.preimage.assign(next, {});
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.preimage[out.image[v]].push_back(v);

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(out.image[u], out.image[v]);
  out.graph = Graph::simple_closure(next, std::move(edges));
  return out;
}

}  // namespace apexminor
