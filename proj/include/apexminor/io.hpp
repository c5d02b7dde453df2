#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apexminor/constructions.hpp"
#include "apexminor/graph.hpp"
#include "apexminor/minor_model.hpp"
#include "apexminor/tree_decomposition.hpp"

namespace apexminor {

using Json = nlohmann::json;

/// Graph text format:
///
///   grid <rows> <cols>     (optional)
///   p <n> <m>
///   e <u> <v>              (m lines, 0-based ids)
///
/// Lines starting with 'c' are comments.
struct GraphFile {
  Graph graph;
  std::optional<GridSpec> grid;
};

GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g, const std::optional<GridSpec>& grid = std::nullopt);
void write_graph_file(const std::filesystem::path& path, const Graph& g,
                      const std::optional<GridSpec>& grid = std::nullopt);

/// Inline graph object: {"vertex_count", "edges"} or {"grid": [rows, cols]}.
Json graph_to_json(const Graph& g, const std::optional<GridSpec>& grid = std::nullopt);
Graph graph_from_json(const Json& j);

/// Extra fields carried by model files.
struct ModelExtras {
  std::optional<std::string> host_file;  // reference instead of an inline host
  std::optional<GridSpec> host_grid;     // host is this grid graph
  std::optional<GridSpec> pattern_grid;  // pattern is this grid graph
  std::vector<Vertex> anchors;           // doubled models only
};

struct ModelFile {
  MinorModel model;
  ModelExtras extras;

  /// The model as a grid model; throws InvalidArgument ("not-grid") without a pattern grid.
  GridModel grid_model() const;
  /// The model paired with its host grid (an H-model drawn in a grid); needs host_grid.
  GridModel host_grid_model() const;
};

Json model_to_json(const MinorModel& m, const ModelExtras& extras = {});

/// `host` overrides the host recorded in the file (a referenced host file is
/// otherwise resolved relative to `base_dir`). Structural problems in the
/// file raise InvalidArgument ("model-format"); the model itself is not verified.
ModelFile model_from_json(const Json& j, const std::filesystem::path& base_dir = {}, GraphPtr host = nullptr);
ModelFile read_model_file(const std::filesystem::path& path, GraphPtr host = nullptr);

Json decomposition_to_json(const TreeDecomposition& d);
TreeDecomposition decomposition_from_json(const Json& j);

Json witness_to_json(const LowerBoundWitness& w);

Json violations_to_json(const std::vector<Violation>& v);

Json read_json_file(const std::filesystem::path& path);
/// Two-space indent plus trailing newline; the byte stream is deterministic.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace apexminor
