#include "apexminor/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "apexminor/error.hpp"

namespace apexminor {

namespace {

[[noreturn]] void format_error(const std::string& code, const std::string& msg) {
  fail(ErrorKind::InvalidArgument, code, msg);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "file-open", "cannot read " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "file-open", "cannot write " + path.string());
  return out;
}

std::vector<Vertex> vertex_list(const Json& j, const std::string& what) {
  if (!j.is_array()) format_error("model-format", what + " must be an array");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) format_error("model-format", what + " must hold integers");
    out.push_back(v.get<Vertex>());
  }
  return out;
}

std::optional<GridSpec> grid_field(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  const Json& g = j.at(key);
  if (!g.is_array() || g.size() != 2) format_error("model-format", std::string(key) + " must be [rows, cols]");
  return GridSpec{g[0].get<int>(), g[1].get<int>()};
}

}  // namespace

// ---------------------------------------------------------------- graph text

GraphFile read_graph(std::istream& in) {
  GraphFile out;
  std::string line;
  int n = -1;
  long declared = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  auto bad = [&](const std::string& why) {
    format_error("graph-format", "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == 'c') continue;
    if (tag == "grid") {
      GridSpec grid;
      if (!(ls >> grid.rows >> grid.cols) || grid.rows < 1 || grid.cols < 1) bad("malformed grid header");
      out.grid = grid;
    } else if (tag == "p") {
      if (n >= 0) bad("second problem line");
      if (!(ls >> n >> declared) || n < 0 || declared < 0) bad("malformed problem line");
      edges.reserve(static_cast<std::size_t>(declared));
    } else if (tag == "e") {
      if (n < 0) bad("edge before problem line");
      Vertex u, v;
      if (!(ls >> u >> v)) bad("malformed edge line");
      edges.emplace_back(u, v);
    } else {
      bad("unknown line type '" + tag + "'");
    }
  }
  if (n < 0) format_error("graph-format", "missing problem line");
  if (static_cast<long>(edges.size()) != declared)
    format_error("graph-format", "problem line declares " + std::to_string(declared) + " edges, file has " +
                                     std::to_string(edges.size()));
  out.graph = Graph(n, edges);
  if (out.grid && out.grid->size() > n) format_error("graph-format", "grid header larger than the graph");
  return out;
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::optional<GridSpec>& grid) {
  if (grid) out << "grid " << grid->rows << ' ' << grid->cols << '\n';
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, const std::optional<GridSpec>& grid) {
  auto out = open_out(path);
  write_graph(out, g, grid);
}

// ---------------------------------------------------------------- json graphs

Json graph_to_json(const Graph& g, const std::optional<GridSpec>& grid) {
  if (grid && is_grid_graph(g, *grid)) return Json{{"grid", {grid->rows, grid->cols}}};
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) format_error("model-format", "graph must be an object");
  if (auto grid = grid_field(j, "grid"); grid && !j.contains("edges")) return make_grid(grid->rows, grid->cols).first;
  if (!j.contains("vertex_count") || !j.contains("edges")) format_error("model-format", "graph needs vertex_count and edges");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) format_error("model-format", "edge must be [u, v]");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph(j.at("vertex_count").get<int>(), edges);
}

// ---------------------------------------------------------------- models

Json model_to_json(const MinorModel& m, const ModelExtras& extras) {
  Json j;
  j["format"] = "apexminor-model/1";
  if (extras.host_file) {
    j["host"] = Json{{"file", *extras.host_file},
                     {"vertex_count", m.host->vertex_count()},
                     {"edge_count", m.host->edge_count()}};
  } else {
    j["host"] = graph_to_json(*m.host, extras.host_grid);
  }
  if (extras.host_grid) j["host_grid"] = {extras.host_grid->rows, extras.host_grid->cols};
  j["pattern"] = graph_to_json(*m.pattern, extras.pattern_grid);
  if (extras.pattern_grid) j["pattern_grid"] = {extras.pattern_grid->rows, extras.pattern_grid->cols};

  Json sets = Json::object();
  for (std::size_t u = 0; u < m.branch_sets.size(); ++u) sets[std::to_string(u)] = m.branch_sets[u];
  j["branch_sets"] = std::move(sets);
  Json reps = Json::object();
  const auto& pe = m.pattern->edges();
  for (std::size_t i = 0; i < pe.size() && i < m.rep_edges.size(); ++i)
    reps[std::to_string(pe[i].first) + "-" + std::to_string(pe[i].second)] = {m.rep_edges[i].first,
                                                                               m.rep_edges[i].second};
  j["rep_edges"] = std::move(reps);
  if (!extras.anchors.empty()) {
    Json anchors = Json::object();
    for (std::size_t u = 0; u < extras.anchors.size(); ++u) anchors[std::to_string(u)] = extras.anchors[u];
    j["anchors"] = std::move(anchors);
  }
  return j;
}

ModelFile model_from_json(const Json& j, const std::filesystem::path& base_dir, GraphPtr host) {
  if (!j.is_object()) format_error("model-format", "model must be a JSON object");
  for (const char* key : {"host", "pattern", "branch_sets"})
    if (!j.contains(key)) format_error("model-format", std::string("missing key '") + key + "'");
  ModelFile out;
  auto& m = out.model;
  auto& extras = out.extras;
  extras.host_grid = grid_field(j, "host_grid");
  extras.pattern_grid = grid_field(j, "pattern_grid");

  const Json& hj = j.at("host");
  if (hj.contains("file")) extras.host_file = hj.at("file").get<std::string>();
  if (host) {
    m.host = std::move(host);
  } else if (extras.host_file) {
    std::filesystem::path p(*extras.host_file);
    if (p.is_relative()) p = base_dir / p;
    m.host = share(read_graph_file(p).graph);
  } else {
    m.host = share(graph_from_json(hj));
  }
  if (hj.contains("vertex_count") && hj.at("vertex_count").get<int>() != m.host->vertex_count())
    format_error("host-mismatch", "model host has " + std::to_string(hj.at("vertex_count").get<int>()) +
                                      " vertices, supplied graph has " + std::to_string(m.host->vertex_count()));
  if (hj.contains("edge_count") && hj.at("edge_count").get<int>() != m.host->edge_count())
    format_error("host-mismatch", "model host edge count differs from the supplied graph");
  m.pattern = share(graph_from_json(j.at("pattern")));

  const Json& sets = j.at("branch_sets");
  if (!sets.is_object()) format_error("model-format", "branch_sets must map pattern vertices to lists");
  m.branch_sets.assign(m.pattern->vertex_count(), {});
  for (auto it = sets.begin(); it != sets.end(); ++it) {
    int u = -1;
    try {
      u = std::stoi(it.key());
    } catch (const std::exception&) {
      format_error("model-format", "branch set key '" + it.key() + "' is not a vertex id");
    }
    if (u < 0 || u >= m.pattern->vertex_count())
      format_error("model-format", "branch set key " + it.key() + " outside the pattern");
    m.branch_sets[u] = vertex_list(it.value(), "branch set " + it.key());
    std::sort(m.branch_sets[u].begin(), m.branch_sets[u].end());
  }

  const auto& pe = m.pattern->edges();
  m.rep_edges.assign(pe.size(), Edge{-1, -1});
  if (j.contains("rep_edges")) {
    for (auto it = j.at("rep_edges").begin(); it != j.at("rep_edges").end(); ++it) {
      int a = -1, b = -1;
      if (std::sscanf(it.key().c_str(), "%d-%d", &a, &b) != 2)
        format_error("model-format", "rep edge key '" + it.key() + "' is not u-v");
      int idx = m.pattern->edge_index(a, b);
      if (idx < 0) format_error("model-format", "rep edge " + it.key() + " is not a pattern edge");
      auto ends = vertex_list(it.value(), "rep edge " + it.key());
      if (ends.size() != 2) format_error("model-format", "rep edge " + it.key() + " needs two endpoints");
      // stored with the endpoint of the smaller pattern vertex first
      m.rep_edges[idx] = a < b ? Edge{ends[0], ends[1]} : Edge{ends[1], ends[0]};
    }
  }
  if (j.contains("anchors"))
    for (auto it = j.at("anchors").begin(); it != j.at("anchors").end(); ++it) {
      std::size_t u = std::stoul(it.key());
      if (extras.anchors.size() <= u) extras.anchors.resize(u + 1, -1);
      extras.anchors[u] = it.value().get<Vertex>();
    }
  return out;
}

ModelFile read_model_file(const std::filesystem::path& path, GraphPtr host) {
  return model_from_json(read_json_file(path), path.parent_path(), std::move(host));
}

GridModel ModelFile::grid_model() const {
  if (!extras.pattern_grid) fail(ErrorKind::InvalidArgument, "not-grid", "model file has no pattern_grid");
  return GridModel{model, *extras.pattern_grid};
}

GridModel ModelFile::host_grid_model() const {
  if (!extras.host_grid) fail(ErrorKind::InvalidArgument, "not-grid", "model file has no host_grid");
  if (!is_grid_graph(*model.host, *extras.host_grid))
    fail(ErrorKind::InvalidArgument, "not-grid", "model host is not the declared host grid");
  return GridModel{model, *extras.host_grid};
}

// ---------------------------------------------------------------- decompositions

Json decomposition_to_json(const TreeDecomposition& d) {
  Json tree = Json::array();
  for (auto [a, b] : d.tree.edges()) tree.push_back({a, b});
  return Json{{"format", "apexminor-decomposition/1"},
              {"path", d.is_path()},
              {"width", d.width()},
              {"bags", d.bags},
              {"tree_edges", std::move(tree)}};
}

TreeDecomposition decomposition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bags")) format_error("decomposition-format", "missing 'bags'");
  TreeDecomposition d;
  for (const auto& bag : j.at("bags")) {
    auto b = vertex_list(bag, "bag");
    std::sort(b.begin(), b.end());
    d.bags.push_back(std::move(b));
  }
  std::vector<Edge> edges;
  if (j.contains("tree_edges")) {
    for (const auto& e : j.at("tree_edges")) {
      if (!e.is_array() || e.size() != 2) format_error("decomposition-format", "tree edge must be [a, b]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } else {
    for (int i = 0; i + 1 < static_cast<int>(d.bags.size()); ++i) edges.emplace_back(i, i + 1);
  }
  d.tree = Graph::simple_closure(static_cast<int>(d.bags.size()), edges);
  if (static_cast<int>(edges.size()) != d.tree.edge_count())
    format_error("decomposition-format", "tree edges contain loops or duplicates");
  return d;
}

Json witness_to_json(const LowerBoundWitness& w) {
  Json diag = Json::array();
  for (auto [a, b] : w.diagonal_edges) diag.push_back({a, b});
  return Json{{"format", "apexminor-witness/1"},
              {"apex", w.apex},
              {"w_set", w.w_set},
              {"grid_side", w.grid_side},
              {"r", w.r},
              {"k", w.k},
              {"gadget", w.gadget},
              {"diagonal_edges", std::move(diag)}};
}

Json violations_to_json(const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back({{"kind", x.kind}, {"detail", x.detail}});
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, "json-parse", path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

}  // namespace apexminor
