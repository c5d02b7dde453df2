// apexminor command line: generators, extractors, verifiers, oracles and
// threshold calculators. Every run leaves a manifest next to its outputs.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "apexminor/apex.hpp"
#include "apexminor/bfs.hpp"
#include "apexminor/constructions.hpp"
#include "apexminor/decomposition.hpp"
#include "apexminor/error.hpp"
#include "apexminor/io.hpp"
#include "apexminor/k3t.hpp"
#include "apexminor/models.hpp"
#include "apexminor/oracles.hpp"
#include "apexminor/report.hpp"

namespace fs = std::filesystem;
using namespace apexminor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitTrials = 3;
constexpr int kExitUsage = 64;
constexpr int kExitDefect = 70;

/// Raised when a certificate or input fails verification; carries the violations.
struct VerificationFailure {
  std::string code;
  std::string message;
  std::vector<Violation> violations;
};

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

// Everything a manifest needs to know about one invocation.
struct Run {
  std::string command;
  std::vector<std::string> argv;
  std::vector<fs::path> inputs;
  std::vector<fs::path> outputs;
  std::optional<std::uint64_t> seed;
  std::string manifest;
  Json flags = Json::object();
  Json result = Json::object();

  GraphFile graph(const fs::path& p) {
    inputs.push_back(p);
    return read_graph_file(p);
  }
  ModelFile model(const fs::path& p, GraphPtr host = nullptr) {
    inputs.push_back(p);
    return read_model_file(p, std::move(host));
  }
  Json json(const fs::path& p) {
    inputs.push_back(p);
    return read_json_file(p);
  }
  void write(const fs::path& p, const Json& j) {
    write_json_file(p, j);
    outputs.push_back(p);
  }
  void write(const fs::path& p, const Graph& g, const std::optional<GridSpec>& grid = std::nullopt) {
    write_graph_file(p, g, grid);
    outputs.push_back(p);
  }
};

// Host reference stored in a model file: the graph path relative to the model's directory.
std::string host_ref(const fs::path& graph, const fs::path& model) {
  fs::path base = fs::absolute(model).parent_path();
  return fs::proximate(fs::absolute(graph), base).generic_string();
}

void require_valid(const MinorModel& m, const std::string& what) {
  auto v = verify_minor_model(m);
  if (!v.empty()) throw VerificationFailure{"self-check", what + " failed verification", v};
}

// Pattern graphs by name: K5, K3,3, P4, C6.
Graph named_graph(const std::string& name) {
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
      fail(ErrorKind::InvalidArgument, "pattern-name", "cannot parse pattern name '" + name + "'");
    return std::stoi(s);
  };
  if (name.size() < 2) fail(ErrorKind::InvalidArgument, "pattern-name", "cannot parse pattern name '" + name + "'");
  const std::string rest = name.substr(1);
  switch (name[0]) {
    case 'K': {
      auto comma = rest.find(',');
      if (comma == std::string::npos) return complete_graph(number(rest));
      return complete_bipartite(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
    }
    case 'P': return path_graph(number(rest));
    case 'C': return cycle_graph(number(rest));
  }
  fail(ErrorKind::InvalidArgument, "pattern-name", "unknown pattern family in '" + name + "'");
}

// "1..4", "2,3,5" or "" (empty sweep).
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

std::optional<GridSpec> grid_of(const GraphFile& f) {
  if (f.grid && is_grid_graph(f.graph, *f.grid)) return f.grid;
  return std::nullopt;
}

// ---------------------------------------------------------------- commands

struct Options {
  std::string graph, model, out, witness, grid_model_out, graph_out, apex_file, h_model, decomp, pattern,
      pattern_name, apex_mode = "none", family = "genus", rs = "1", params = "", grid_model;
  int rows = 0, cols = 0, r = 0, k = 0, l = 0, t = 0, d = 0, g = 0, n = 0, m = 0, p = 0, centre = -1, root = -1,
      apex_vertex = -1, max_trials = 0, radius = 0, tw_limit = 18, time_budget_ms = 60000;
  std::uint64_t seed = 0;
  bool bag_tw = false, extract = false;
};

void cmd_gen_grid(Run& run, const Options& o) {
  auto [grid_graph, grid] = make_grid(o.rows, o.cols);
  std::vector<Vertex> hubs;
  for (int x = 1; x <= o.rows; ++x)
    for (int y = 1; y <= o.cols; ++y) {
      bool take = o.apex_mode == "all" || (o.apex_mode == "even" && x % 2 == 0 && y % 2 == 0) ||
                  (o.apex_mode == "even-sum" && (x + y) % 2 == 0) || (o.apex_mode == "odd-sum" && (x + y) % 2 == 1);
      if (take) hubs.push_back(grid.vertex(x, y));
    }
  Graph g = o.apex_mode == "none" ? grid_graph : add_apex(grid_graph, hubs);
  run.write(o.out, g, grid);
  run.result["vertex_count"] = g.vertex_count();
  run.result["edge_count"] = g.edge_count();
  if (o.apex_mode != "none") run.result["apex"] = grid.size();
  if (!o.grid_model_out.empty()) {
    GraphPtr host = share(std::move(g));
    GridModel gm = identity_grid_model(host, grid);
    require_valid(gm.model, "identity grid model");
    ModelExtras extras;
    extras.host_file = host_ref(o.out, o.grid_model_out);
    extras.pattern_grid = grid;
    run.write(o.grid_model_out, model_to_json(gm.model, extras));
  }
}

void cmd_gen_lower_bound(Run& run, const Options& o) {
  LowerBoundGraph lb = lower_bound_graph(o.r, o.k);
  WitnessReport report = check_lower_bound(lb);
  run.result["checks"] = {{"grid_subgraph", report.grid_subgraph},
                          {"radius", report.radius_ok},
                          {"planar_part", report.planar_part},
                          {"apex_degree", report.apex_degree},
                          {"near_w", report.near_w}};
  if (!report.ok()) throw VerificationFailure{"self-check", "lower-bound witness checks failed", {}};
  run.write(o.out, lb.graph, lb.grid);
  if (!o.witness.empty()) run.write(o.witness, witness_to_json(lb.witness));
  run.result["vertex_count"] = lb.graph.vertex_count();
  run.result["apex"] = lb.witness.apex;
  run.result["euler_genus_bound"] = 2 * o.k * o.k;
}

GraphPtr optional_host(Run& run, const std::string& graph) {
  return graph.empty() ? nullptr : share(run.graph(graph).graph);
}

void cmd_double_model(Run& run, const Options& o) {
  std::optional<GraphFile> host_file;
  if (!o.graph.empty()) host_file = run.graph(o.graph);
  ModelFile in = run.model(o.model, host_file ? share(host_file->graph) : nullptr);
  std::optional<GridSpec> grid = in.extras.host_grid;
  if (!grid && host_file) grid = grid_of(*host_file);
  if (!grid) fail(ErrorKind::InvalidArgument, "not-grid", "double-model needs a model whose host is a grid");
  if (auto v = verify_minor_model(in.model); !v.empty())
    throw VerificationFailure{"invalid-model", "input model failed verification", v};
  DoubledModel dm = double_model(in.model, *grid);
  require_valid(dm.model, "doubled model");
  if (auto v = verify_anchors(dm); !v.empty()) throw VerificationFailure{"self-check", "anchor check failed", v};
  ModelExtras extras;
  extras.host_grid = dm.grid;
  extras.pattern_grid = in.extras.pattern_grid;
  extras.anchors = dm.anchors;
  run.write(o.out, model_to_json(dm.model, extras));
  run.result["grid"] = {dm.grid.rows, dm.grid.cols};
}

void cmd_k2t_model(Run& run, const Options& o) {
  GridModel gm = k2t_model(o.t);
  require_valid(gm.model, "K_{2,t} model");
  int c = 1;
  while (c * c < o.t) ++c;
  const GridSpec host_grid{3 * c, c + 2};
  ModelExtras extras;
  extras.host_grid = host_grid;
  run.write(o.out, model_to_json(gm.model, extras));
  if (!o.graph_out.empty()) run.write(o.graph_out, *gm.model.host, host_grid);
  run.result["grid"] = {host_grid.rows, host_grid.cols};
}

ModelExtras carry_host(const ModelFile& in, const Options& o, const fs::path& model_in) {
  ModelExtras extras;
  if (!o.graph.empty()) extras.host_file = host_ref(o.graph, o.out);
  else if (in.extras.host_file) extras.host_file = host_ref(model_in.parent_path() / *in.extras.host_file, o.out);
  extras.host_grid = in.extras.host_grid;
  return extras;
}

void cmd_contract_subgrids(Run& run, const Options& o) {
  ModelFile in = run.model(o.model, optional_host(run, o.graph));
  GridModel out = contract_subgrids(in.grid_model(), o.p);
  require_valid(out.model, "contracted grid model");
  if (!is_grid_graph(*out.model.pattern, out.grid))
    throw VerificationFailure{"self-check", "contracted pattern is not a grid", {}};
  ModelExtras extras = carry_host(in, o, o.model);
  extras.pattern_grid = out.grid;
  run.write(o.out, model_to_json(out.model, extras));
  run.result["grid"] = {out.grid.rows, out.grid.cols};
}

void cmd_extract_apex(Run& run, const Options& o) {
  run.seed = o.seed;
  GraphPtr g = share(run.graph(o.graph).graph);
  GridModel gm = run.model(o.grid_model, g).grid_model();
  ApexInstance inst = ApexInstance::make(run.graph(o.apex_file).graph, o.apex_vertex);
  GridModel hm = run.model(o.h_model).host_grid_model();
  ApexConfig cfg{o.seed, o.max_trials, o.radius > 0 ? std::optional<int>(o.radius) : std::nullopt};
  ApexExtraction ex = extract_apex(g, o.centre, gm, inst, hm, cfg);
  require_valid(ex.model, "apex model");
  ModelExtras extras;
  extras.host_file = host_ref(o.graph, o.out);
  Json j = model_to_json(ex.model, extras);
  j["extraction"] = {{"seed", o.seed}, {"trials", ex.trials}, {"n", ex.n}, {"radius", ex.radius},
                     {"offsets", ex.offsets}};
  run.write(o.out, j);
  run.result["trials"] = ex.trials;
  run.result["n"] = ex.n;
}

void cmd_extract_k3t(Run& run, const Options& o) {
  run.seed = o.seed;
  GraphPtr g = share(run.graph(o.graph).graph);
  GridModel gm = run.model(o.grid_model, g).grid_model();
  K3tConfig cfg{o.seed, o.max_trials > 0 ? o.max_trials : 64};
  K3tExtraction ex = extract_k3t(g, o.centre, o.radius, gm, cfg);
  require_valid(ex.model, "K_{3,t} model");
  ModelExtras extras;
  extras.host_file = host_ref(o.graph, o.out);
  Json j = model_to_json(ex.model, extras);
  const auto& tr = ex.trace;
  j["extraction"] = {{"seed", o.seed},
                     {"t", ex.t},
                     {"guarantee", {{"numerator", ex.guarantee.numerator},
                                    {"denominator", ex.guarantee.denominator},
                                    {"guaranteed", ex.guarantee.guaranteed}}},
                     {"columns", tr.columns},
                     {"column_trials", tr.column_trials},
                     {"base", tr.base.size()},
                     {"survivors", tr.survivors.size()},
                     {"independent", tr.independent.size()},
                     {"pruned_row", tr.pruned_row}};
  run.write(o.out, j);
  run.result["t"] = ex.t;
  run.result["guaranteed"] = ex.guarantee.guaranteed;
}

void cmd_decompose_ttw(Run& run, const Options& o) {
  Graph g = run.graph(o.graph).graph;
  LayeredDecomposition d = layered_path_decomposition(g, o.root);
  if (auto check = verify_decomposition(g, d.base); !check.ok())
    throw VerificationFailure{"self-check", "layered decomposition failed verification", check.violations};
  const int e = d.layering.eccentricity();
  for (int i = 1; i <= e; ++i) {
    LayerGraph li = contracted_layer_graph(g, o.root, i);
    auto dist = bfs_distances(li.graph, li.root);
    if (*std::max_element(dist.begin(), dist.end()) > 2 || *std::min_element(dist.begin(), dist.end()) < 0)
      throw VerificationFailure{"self-check", "contracted layer graph " + std::to_string(i) + " has radius above 2", {}};
  }
  Json j = decomposition_to_json(d.base);
  j["root"] = o.root;
  j["eccentricity"] = e;
  if (o.bag_tw) {
    OracleLimits limits;
    limits.max_tw_vertices = o.tw_limit;
    auto widths = bag_treewidths(g, o.root, limits);
    j["bag_treewidth"] = widths;
    j["ttw_upper"] = *std::max_element(widths.begin(), widths.end());
    run.result["ttw_upper"] = j["ttw_upper"];
  }
  run.write(o.out, j);
  run.result["bags"] = d.base.bags.size();
  run.result["width"] = d.base.width();
}

void cmd_verify_model(Run& run, const Options& o) {
  ModelFile in = run.model(o.model, optional_host(run, o.graph));
  std::vector<Violation> v = verify_minor_model(in.model);
  if (in.extras.pattern_grid && !is_grid_graph(*in.model.pattern, *in.extras.pattern_grid))
    v.push_back({"shape", "pattern is not the declared pattern grid"});
  if (v.empty() && !in.extras.anchors.empty() && in.extras.host_grid) {
    DoubledModel dm{in.model, *in.extras.host_grid, in.extras.anchors};
    auto a = verify_anchors(dm);
    v.insert(v.end(), a.begin(), a.end());
  }
  if (!v.empty()) throw VerificationFailure{"invalid-model", "model failed verification", v};
  run.result["ok"] = true;
  run.result["pattern_vertices"] = in.model.pattern->vertex_count();
}

void cmd_verify_td(Run& run, const Options& o) {
  Graph g = run.graph(o.graph).graph;
  TreeDecomposition d = decomposition_from_json(run.json(o.decomp));
  DecompositionCheck check = verify_decomposition(g, d);
  if (!check.ok()) throw VerificationFailure{"invalid-decomposition", "decomposition failed verification", check.violations};
  run.result["ok"] = true;
  run.result["width"] = check.width;
  run.result["path"] = d.is_path();
}

OracleLimits limits_of(const Options& o) {
  OracleLimits limits;
  limits.max_tw_vertices = o.tw_limit;
  limits.time_budget = std::chrono::milliseconds(o.time_budget_ms);
  return limits;
}

void cmd_oracle_tw(Run& run, const Options& o) {
  Graph g = run.graph(o.graph).graph;
  TreewidthResult tw = exact_treewidth(g, limits_of(o));
  if (auto check = verify_decomposition(g, tw.decomposition); !check.ok() || check.width != tw.width)
    throw VerificationFailure{"self-check", "treewidth witness failed verification", check.violations};
  if (!o.out.empty()) run.write(o.out, decomposition_to_json(tw.decomposition));
  run.result["treewidth"] = tw.width;
  std::cout << tw.width << '\n';
}

void cmd_oracle_minor(Run& run, const Options& o) {
  GraphFile host_file = run.graph(o.graph);
  GraphPtr g = share(host_file.graph);
  GraphPtr h = share(o.pattern.empty() ? named_graph(o.pattern_name) : run.graph(o.pattern).graph);
  auto model = minor_test(g, h, limits_of(o));
  if (model) {
    require_valid(*model, "minor witness");
    if (!o.out.empty()) {
      ModelExtras extras;
      extras.host_file = host_ref(o.graph, o.out);
      extras.host_grid = grid_of(host_file);
      run.write(o.out, model_to_json(*model, extras));
    }
  }
  run.result["minor"] = model.has_value();
  std::cout << (model ? "minor" : "not-minor") << '\n';
}

void cmd_oracle_planar(Run& run, const Options& o) {
  bool planar = planarity_test(run.graph(o.graph).graph);
  run.result["planar"] = planar;
  std::cout << (planar ? "planar" : "non-planar") << '\n';
}

void print_value(Run& run, const std::string& text) {
  run.result["value"] = text;
  std::cout << text << '\n';
}

void cmd_report(Run& run, const Options& o) {
  SweepConfig cfg{parse_range(o.rs), parse_range(o.params), o.extract, o.seed};
  if (o.extract) run.seed = o.seed;
  std::vector<ReportRow> rows;
  if (o.family == "genus") rows = genus_sweep(cfg);
  else if (o.family == "k3t") rows = k3t_sweep(cfg);
  else fail(ErrorKind::InvalidArgument, "family", "report family must be genus or k3t");
  std::ofstream out(o.out, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "file-open", "cannot write " + o.out);
  emit_report(out, rows);
  run.outputs.push_back(o.out);
  run.result["rows"] = rows.size();
}

// ---------------------------------------------------------------- plumbing

Json error_object(const std::string& kind, const std::string& code, const std::string& message,
                  const std::vector<Violation>& violations = {}) {
  Json e = {{"kind", kind}, {"code", code}, {"message", message}};
  if (!violations.empty()) e["violations"] = violations_to_json(violations);
  return Json{{"error", std::move(e)}};
}

void record_flags(Run& run, const CLI::App* sub) {
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    auto name = opt->get_name();
    name.erase(0, name.find_first_not_of('-'));
    const auto& res = opt->results();
    if (opt->get_expected_max() == 0) run.flags[name] = true;
    else if (res.size() == 1) run.flags[name] = res.front();
    else run.flags[name] = res;
  }
}

void write_manifest(const Run& run, int exit_code, const std::string& outcome, double wall_ms) {
  Json inputs = Json::array();
  std::vector<fs::path> seen;
  for (const auto& p : run.inputs) {
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    seen.push_back(p);
    inputs.push_back({{"path", p.generic_string()}, {"sha256", sha256_file(p)}});
  }
  Json outputs = Json::array();
  for (const auto& p : run.outputs) outputs.push_back({{"path", p.generic_string()}, {"sha256", sha256_file(p)}});
  Json manifest = {{"format", "apexminor-manifest/1"},
                   {"command", run.command},
                   {"argv", run.argv},
                   {"flags", run.flags},
                   {"seed", run.seed ? Json(*run.seed) : Json(nullptr)},
                   {"inputs", std::move(inputs)},
                   {"outputs", std::move(outputs)},
                   {"result", run.result},
                   {"wall_clock_ms", wall_ms},
                   {"exit_code", exit_code},
                   {"outcome", outcome}};
  fs::path path = run.manifest;
  if (path.empty()) {
    std::string stem = run.command;
    std::replace(stem.begin(), stem.end(), ' ', '-');
    // a failed run has no outputs yet; the requested --out still names it
    if (!run.outputs.empty()) path = run.outputs.front().string() + ".manifest.json";
    else if (run.flags.contains("out") && run.flags["out"].is_string())
      path = run.flags["out"].get<std::string>() + ".manifest.json";
    else path = stem + ".manifest.json";
  }
  try {
    write_json_file(path, manifest);
  } catch (const std::exception& e) {
    std::cerr << error_object("io", "manifest", e.what()).dump() << '\n';
  }
}

const std::vector<std::string> kCommands = {"gen-grid",       "gen-lower-bound", "double-model", "k2t-model",
                                            "contract-subgrids", "extract-apex", "extract-k3t",  "decompose-ttw",
                                            "verify-model",   "verify-td",       "threshold",    "oracle",
                                            "report"};

}  // namespace

int dispatch(int argc, char** argv) {
  CLI::App app{"apexminor: certificate-producing grid-minor toolkit"};
  app.require_subcommand(1);
  Options o;
  Run run;
  std::function<void(Run&, const Options&)> action;

  auto sub = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--manifest", run.manifest, "Manifest path (default: <first output>.manifest.json)");
    s->callback([&, name, fn] {
      run.command = name;
      action = fn;
    });
    return s;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->add_option("--manifest", run.manifest, "Manifest path");
    s->callback([&, parent, name, fn] {
      run.command = parent->get_name() + " " + name;
      action = fn;
    });
    return s;
  };

  {
    auto* s = sub("gen-grid", "Grid graph, optionally with an apex", cmd_gen_grid);
    s->add_option("--rows", o.rows)->required()->check(CLI::PositiveNumber);
    s->add_option("--cols", o.cols)->required()->check(CLI::PositiveNumber);
    s->add_option("--apex", o.apex_mode, "none | all | even | even-sum | odd-sum")
        ->check(CLI::IsMember({"none", "all", "even", "even-sum", "odd-sum"}));
    s->add_option("--out", o.out)->required();
    s->add_option("--grid-model", o.grid_model_out, "Also write the identity grid model");
  }
  {
    auto* s = sub("gen-lower-bound", "Lower-bound graph with its genus witness", cmd_gen_lower_bound);
    s->add_option("--r", o.r)->required();
    s->add_option("--k", o.k)->required();
    s->add_option("--out", o.out)->required();
    s->add_option("--witness", o.witness);
  }
  {
    auto* s = sub("double-model", "Doubling trick on a model drawn in a grid", cmd_double_model);
    s->add_option("--model", o.model)->required();
    s->add_option("--graph", o.graph, "Host grid graph (overrides the model's host)");
    s->add_option("--out", o.out)->required();
  }
  {
    auto* s = sub("k2t-model", "K_{2,t} model in a 3c x (c+2) grid", cmd_k2t_model);
    s->add_option("--t", o.t)->required();
    s->add_option("--out", o.out)->required();
    s->add_option("--graph-out", o.graph_out, "Also write the host grid graph");
  }
  {
    auto* s = sub("contract-subgrids", "Merge p x p blocks of a grid model", cmd_contract_subgrids);
    s->add_option("--model", o.model)->required();
    s->add_option("--graph", o.graph);
    s->add_option("--p", o.p)->required();
    s->add_option("--out", o.out)->required();
  }
  {
    auto* s = sub("extract-apex", "Randomized apex-graph model extraction", cmd_extract_apex);
    s->add_option("--graph", o.graph)->required();
    s->add_option("--centre", o.centre)->required();
    s->add_option("--grid-model", o.grid_model)->required();
    s->add_option("--apex", o.apex_file, "Graph file of the apex graph A")->required();
    s->add_option("--apex-vertex", o.apex_vertex)->required();
    s->add_option("--h-model", o.h_model, "Model of A minus the apex vertex in a grid")->required();
    s->add_option("--seed", o.seed)->required();
    s->add_option("--max-trials", o.max_trials, "0 selects 8n");
    s->add_option("--radius", o.radius, "Radius bound (default: eccentricity of the centre)");
    s->add_option("--out", o.out)->required();
  }
  {
    auto* s = sub("extract-k3t", "Randomized K_{3,t} model extraction", cmd_extract_k3t);
    s->add_option("--graph", o.graph)->required();
    s->add_option("--centre", o.centre)->required();
    s->add_option("--radius", o.radius)->required();
    s->add_option("--grid-model", o.grid_model)->required();
    s->add_option("--seed", o.seed)->required();
    s->add_option("--max-trials", o.max_trials);
    s->add_option("--out", o.out)->required();
  }
  {
    auto* s = sub("decompose-ttw", "BFS-layered path decomposition", cmd_decompose_ttw);
    s->add_option("--graph", o.graph)->required();
    s->add_option("--root", o.root)->required();
    s->add_option("--out", o.out)->required();
    s->add_flag("--bag-tw", o.bag_tw, "Exact treewidth of every bag");
    s->add_option("--tw-limit", o.tw_limit);
  }
  {
    auto* s = sub("verify-model", "Check a minor model certificate", cmd_verify_model);
    s->add_option("--graph", o.graph);
    s->add_option("--model", o.model)->required();
  }
  {
    auto* s = sub("verify-td", "Check a tree decomposition", cmd_verify_td);
    s->add_option("--graph", o.graph)->required();
    s->add_option("--decomp", o.decomp)->required();
  }
  {
    CLI::App* th = app.add_subcommand("threshold", "Closed-form thresholds");
    th->require_subcommand(1);
    auto* apex = leaf(th, "apex", "16rtd", [](Run& r, const Options& o) {
      print_value(r, std::to_string(apex_grid_threshold(o.r, o.t, o.d)));
    });
    apex->add_option("--r", o.r)->required();
    apex->add_option("--t", o.t)->required();
    apex->add_option("--d", o.d)->required();
    auto* exact = leaf(th, "apex-grid", "Exact grid size for a k x l H-model", [](Run& r, const Options& o) {
      auto sz = apex_exact_grid(o.r, o.d, o.k, o.l);
      print_value(r, std::to_string(sz.rows) + "x" + std::to_string(sz.cols) + " n=" + std::to_string(sz.n));
    });
    exact->add_option("--r", o.r)->required();
    exact->add_option("--d", o.d)->required();
    exact->add_option("--k", o.k)->required();
    exact->add_option("--l", o.l)->required();
    auto* simple = leaf(th, "simple", "(2t-2)^r", [](Run& r, const Options& o) {
      print_value(r, simple_threshold(o.t, o.r).str());
    });
    simple->add_option("--t", o.t)->required();
    simple->add_option("--r", o.r)->required();
    auto* k3t = leaf(th, "k3t", "ceil(4r(1+sqrt(t-1)))", [](Run& r, const Options& o) {
      print_value(r, std::to_string(k3t_grid_threshold(o.t, o.r)));
    });
    k3t->add_option("--t", o.t)->required();
    k3t->add_option("--r", o.r)->required();
    auto* genus = leaf(th, "genus", "ceil(4r(1+sqrt(2g+2)))", [](Run& r, const Options& o) {
      print_value(r, std::to_string(genus_grid_threshold(o.g, o.r)));
    });
    genus->add_option("--g", o.g)->required();
    genus->add_option("--r", o.r)->required();
    auto* g2t = leaf(th, "genus-to-k3t", "2g+3", [](Run& r, const Options& o) {
      print_value(r, std::to_string(genus_to_k3t(o.g)));
    });
    g2t->add_option("--g", o.g)->required();
    auto* guar = leaf(th, "k3t-guarantee", "(n-4r+2)(m-4r+2)/(8r(2r-1))", [](Run& r, const Options& o) {
      auto q = k3t_guarantee(o.n, o.m, o.r);
      print_value(r, std::to_string(q.numerator) + "/" + std::to_string(q.denominator) + " guaranteed=" +
                         std::to_string(q.guaranteed));
    });
    guar->add_option("--n", o.n)->required();
    guar->add_option("--m", o.m)->required();
    guar->add_option("--r", o.r)->required();
    auto* lb = leaf(th, "lower-bound", "Lower-bound grid side for genus g", [](Run& r, const Options& o) {
      auto p = lower_bound_params_genus(o.g, o.r);
      print_value(r, "k=" + std::to_string(p.k) + " n=" + std::to_string(p.n));
    });
    lb->add_option("--g", o.g)->required();
    lb->add_option("--r", o.r)->required();
    auto* alb = leaf(th, "apex-lb", "Lower-bound grid side for K_{3,t}", [](Run& r, const Options& o) {
      auto p = apex_lb_params(o.t, o.r);
      print_value(r, "k=" + std::to_string(p.k) + " n=" + std::to_string(p.n) +
                         " genus_check=" + (p.genus_check ? "true" : "false"));
    });
    alb->add_option("--t", o.t)->required();
    alb->add_option("--r", o.r)->required();
  }
  {
    CLI::App* orc = app.add_subcommand("oracle", "Small-instance ground truth");
    orc->require_subcommand(1);
    auto* tw = leaf(orc, "tw", "Exact treewidth", cmd_oracle_tw);
    tw->add_option("--graph", o.graph)->required();
    tw->add_option("--out", o.out, "Write the witness decomposition");
    tw->add_option("--tw-limit", o.tw_limit);
    auto* mn = leaf(orc, "minor", "Minor containment", cmd_oracle_minor);
    mn->add_option("--graph", o.graph)->required();
    auto* pat = mn->add_option("--pattern", o.pattern, "Pattern graph file");
    auto* pname = mn->add_option("--pattern-name", o.pattern_name, "K5, K3,3, P4, C6 ...");
    pat->excludes(pname);
    mn->add_option("--out", o.out, "Write the model when found");
    mn->add_option("--time-budget-ms", o.time_budget_ms);
    auto* pl = leaf(orc, "planar", "Planarity", cmd_oracle_planar);
    pl->add_option("--graph", o.graph)->required();
  }
  {
    auto* s = sub("report", "Upper vs lower bound sweep as CSV", cmd_report);
    s->add_option("--family", o.family, "genus | k3t");
    s->add_option("--r", o.rs, "Range such as 1..3 or 1,2");
    s->add_option("--param", o.params, "g or t range; empty for a header-only table");
    s->add_flag("--extract", o.extract, "Add achieved t from seeded K_{3,t} extractions");
    s->add_option("--seed", o.seed);
    s->add_option("--out", o.out)->required();
  }

  if (argc < 2 || std::find(kCommands.begin(), kCommands.end(), std::string(argv[1])) == kCommands.end()) {
    std::string first = argc < 2 ? "" : argv[1];
    if (first == "-h" || first == "--help") {
      std::cout << app.help();
      return kExitOk;
    }
    std::cerr << error_object("usage", "unknown-command",
                              first.empty() ? "no command given" : "unknown command '" + first + "'")
                     .dump()
              << '\n'
              << app.help();
    return kExitUsage;
  }

  for (int i = 0; i < argc; ++i) run.argv.emplace_back(argv[i]);
  run.command = argv[1];
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  int code = kExitOk;
  std::string outcome = "ok";
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      std::cout << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      std::cout << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      std::cerr << error_object("usage", "bad-flags", e.what()).dump() << '\n';
      write_manifest(run, kExitInvalid, "bad-flags", elapsed());
      return kExitInvalid;
    }
    for (CLI::App* s : app.get_subcommands()) {
      record_flags(run, s);
      for (CLI::App* inner : s->get_subcommands()) record_flags(run, inner);
    }
    action(run, o);
  } catch (const VerificationFailure& f) {
    std::cerr << error_object("validation", f.code, f.message, f.violations).dump() << '\n';
    code = f.code == "self-check" ? kExitDefect : kExitInvalid;
    outcome = f.code;
  } catch (const Error& e) {
    std::cerr << error_object(to_string(e.kind()), e.code(), e.what()).dump() << '\n';
    code = e.kind() == ErrorKind::TrialsExhausted ? kExitTrials
           : e.kind() == ErrorKind::Defect        ? kExitDefect
                                                  : kExitInvalid;
    outcome = e.code();
  } catch (const std::exception& e) {
    std::cerr << error_object("invalid-argument", "input", e.what()).dump() << '\n';
    code = kExitInvalid;
    outcome = "input";
  }
  write_manifest(run, code, outcome, elapsed());
  return code;
}

int main(int argc, char** argv) { return dispatch(argc, argv); }
