#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apexminor/apex.hpp"
#include "apexminor/constructions.hpp"
#include "apexminor/decomposition.hpp"
#include "apexminor/error.hpp"
#include "apexminor/io.hpp"
#include "apexminor/k3t.hpp"
#include "apexminor/oracles.hpp"

namespace py = pybind11;
using namespace apexminor;

namespace {

// Models cross the boundary as plain dicts of branch sets and representing edges.
py::dict model_dict(const MinorModel& m) {
  py::dict d;
  d["branch_sets"] = m.branch_sets;
  d["rep_edges"] = m.rep_edges;
  d["pattern_edges"] = m.pattern->edges();
  return d;
}

MinorModel model_from(const Graph& host, const Graph& pattern, std::vector<std::vector<Vertex>> branch_sets,
                      std::vector<Edge> rep_edges) {
  return MinorModel{share(host), share(pattern), std::move(branch_sets), std::move(rep_edges)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grid minors, apex extraction and K_{3,t} certificates";

  // kept alive for the interpreter's lifetime; the message leads with the error code
  static py::handle error = py::exception<Error>(m, "ApexminorError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (e.code() + ": " + e.what()).c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("vertex_count"),
           py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) { return std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end()); })
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", &Graph::operator==)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("complete_graph", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("grid_graph", [](int rows, int cols) { return make_grid(rows, cols).first; });
  m.def("add_apex", [](const Graph& g, const std::vector<Vertex>& nbrs) { return add_apex(g, nbrs); });

  m.def("treewidth", [](const Graph& g, int max_vertices) {
    OracleLimits limits;
    limits.max_tw_vertices = max_vertices;
    auto r = exact_treewidth(g, limits);
    return py::make_tuple(r.width, r.decomposition.bags);
  }, py::arg("graph"), py::arg("max_vertices") = 18, "Exact treewidth and the bags of an optimal decomposition.");

  m.def("find_minor", [](const Graph& g, const Graph& h) -> py::object {
    auto model = minor_test(share(g), share(h));
    if (!model) return py::none();
    return model_dict(*model);
  }, "Branch sets of an h-model in g, or None.");

  m.def("is_planar", &planarity_test);

  m.def("verify_model", [](const Graph& host, const Graph& pattern, std::vector<std::vector<Vertex>> branch_sets,
                           std::vector<Edge> rep_edges) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& v : verify_minor_model(model_from(host, pattern, std::move(branch_sets), std::move(rep_edges))))
      out.emplace_back(v.kind, v.detail);
    return out;
  }, "Violations as (kind, detail) pairs; empty means valid.");

  m.def("ttw_upper", [](const Graph& g, Vertex root) { return ttw_upper(g, root); });
  m.def("layered_bags", [](const Graph& g, Vertex root) { return layered_path_decomposition(g, root).base.bags; });

  m.def("lower_bound_graph", [](int r, int k) {
    auto lb = lower_bound_graph(r, k);
    py::dict d;
    d["graph"] = lb.graph;
    d["apex"] = lb.witness.apex;
    d["w_set"] = lb.witness.w_set;
    d["grid_side"] = lb.witness.grid_side;
    d["ok"] = check_lower_bound(lb).ok();
    return d;
  });

  m.def("extract_k3t", [](const Graph& g, int rows, int cols, Vertex centre, int r, std::uint64_t seed) {
    GraphPtr host = share(g);
    auto ex = extract_k3t(host, centre, r, identity_grid_model(host, GridSpec{rows, cols}), K3tConfig{seed, 64});
    py::dict d = model_dict(ex.model);
    d["t"] = ex.t;
    d["guaranteed"] = ex.guarantee.guaranteed;
    return d;
  }, py::arg("graph"), py::arg("rows"), py::arg("cols"), py::arg("centre"), py::arg("radius"), py::arg("seed"),
     "K_{3,t} model from a graph whose first rows*cols ids form a grid avoiding the centre.");

  m.def("apex_grid_threshold", &apex_grid_threshold);
  m.def("simple_threshold", [](int t, int r) { return py::int_(py::str(simple_threshold(t, r).str())); });
  m.def("k3t_grid_threshold", &k3t_grid_threshold);
  m.def("genus_grid_threshold", &genus_grid_threshold);
  m.def("genus_to_k3t", &genus_to_k3t);
}
