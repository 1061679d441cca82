#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uec/audit.hpp"
#include "uec/bounds.hpp"
#include "uec/canonical.hpp"
#include "uec/coloring.hpp"
#include "uec/criticality.hpp"
#include "uec/embedding.hpp"
#include "uec/error.hpp"
#include "uec/io.hpp"
#include "uec/search.hpp"
#include "uec/structure.hpp"

namespace py = pybind11;
using namespace uec;

namespace {

// Reports cross the boundary as plain dicts via their JSON form.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

DomainMode mode_of(bool relaxed) { return relaxed ? DomainMode::relaxed : DomainMode::strict; }

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("edge endpoint out of range");
    es.push_back(make_edge(a, b));
  }
  return build_graph(n, es);
}

py::list edge_list(const Graph& g) {
  py::list out;
  for (const Edge& e : g.edges()) out.append(py::make_tuple(e.u, e.v));
  return out;
}

Json witnesses(const std::vector<EdgeWitness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back({w.edge.u, w.edge.v});
  return out;
}

Json classification(const Graph& g) {
  const ClassificationReport r = classify(g);
  return {{"graph6", canonical_graph6(g)},
          {"n", r.n},
          {"m", r.m},
          {"planar", r.planar},
          {"chromatic_3", r.chromatic_3},
          {"uniquely_3", r.uniquely_3},
          {"partition", r.partition ? Json(r.partition->classes) : Json(nullptr)},
          {"edge_critical_definitional", r.edge_critical_definitional},
          {"edge_critical_contraction", r.edge_critical_contraction},
          {"in_ue", r.in_ue},
          {"definitional_witnesses", witnesses(r.definitional_witnesses)},
          {"contraction_witnesses", witnesses(r.contraction_witnesses)}};
}

Json records(const std::vector<ResultRecord>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(r.to_line());
  return out;
}

Budget budget(double seconds) {
  Budget b;
  b.seconds = seconds;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Edge-critical uniquely 3-colourable planar graphs";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);
  (void)input_error;

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def_property_readonly("edges", &edge_list)
      .def("has_edge", [](const Graph& g, int a, int b) { return g.has_edge(a, b); })
      .def("graph6", &emit_graph6)
      .def("edge_list_text", &emit_edge_list)
      .def("canonical_graph6", &canonical_graph6)
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("from_edge_list", [](const std::string& s) { return parse_edge_list(s); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("fixture", [](const std::string& name) { return fixture(name); }, py::arg("name"));
  m.def("fixture_names", &fixture_names);
  m.def("is_planar", &planar);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("chromatic_value", &chromatic_value, py::arg("g"), py::arg("k"));
  m.def("is_uniquely_3_colorable", [](const Graph& g) { return is_uniquely_3_colorable(g).unique; });
  m.def("classify", [](const Graph& g) { return to_py(classification(g)); });
  m.def(
      "audit",
      [](const Graph& g, bool relaxed) { return to_py(to_json(audit_instance(g, mode_of(relaxed)))); },
      py::arg("g"), py::arg("relaxed") = false);
  m.def(
      "decompose",
      [](const Graph& g, bool relaxed) { return to_py(to_json(triangle_components(g, mode_of(relaxed)))); },
      py::arg("g"), py::arg("relaxed") = false);
  m.def("bound_report", [](const Graph& g) { return to_py(to_json(bound_report(g))); });
  m.def("upper_line", &upper_line);
  m.def("lower_line", &lower_line);
  m.def(
      "size",
      [](int n, int jobs, double budget_seconds, const std::string& shard) {
        const ShardSpec spec = shard.empty() ? ShardSpec{} : ShardSpec::parse(shard);
        SizeResult s;
        {
          py::gil_scoped_release release;
          s = compute_size(n, jobs, budget(budget_seconds), spec);
        }
        return to_py({{"row", to_json(s.row)}, {"records", records(s.records)}, {"audits_passed", s.audits_passed}});
      },
      py::arg("n"), py::arg("jobs") = 1, py::arg("budget_seconds") = 0.0, py::arg("shard") = "");
  m.def(
      "hunt",
      [](int n, int edges, const std::string& strategy, double budget_seconds, int jobs) {
        const HuntStrategy st = parse_strategy(strategy);
        HuntResult h;
        {
          py::gil_scoped_release release;
          h = hunt(n, edges, st, budget(budget_seconds), jobs);
        }
        return to_py({{"hits", records(h.hits)},
                      {"candidates", h.candidates},
                      {"exhausted", h.exhausted},
                      {"audits_passed", h.audits_passed}});
      },
      py::arg("n"), py::arg("m"), py::arg("strategy") = "carving", py::arg("budget_seconds") = 0.0,
      py::arg("jobs") = 1);
}
