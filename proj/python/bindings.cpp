#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "critbound/bounds.hpp"
#include "critbound/coloring.hpp"
#include "critbound/discharge.hpp"
#include "critbound/errors.hpp"
#include "critbound/generators.hpp"
#include "critbound/reducibility.hpp"
#include "critbound/structure.hpp"
#include "critbound/tree_checks.hpp"

namespace py = pybind11;
using namespace critbound;

namespace {

std::vector<int> members(VertexSet s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Critical-graph average-degree workbench";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<CorrectnessFinding>(m, "CorrectnessFinding", PyExc_AssertionError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             Graph g(n);
             for (const auto& [u, v] : edges) g.add_edge(u, v);
             return g;
           }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("parse", [](const std::string& s) { return parse_graph(s); })
      .def("graph6", [](const Graph& g) { return write_graph6(g); })
      .def("edge_list", [](const Graph& g) { return write_edge_list(g); })
      .def("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("neighbors", [](const Graph& g, int v) { return members(g.neighbors(v)); })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("wheel_graph", &wheel_graph, py::arg("rim"));
  m.def("are_isomorphic", &are_isomorphic);

  m.def("is_gallai_tree", &is_gallai_tree);
  m.def("in_T_k", &in_T_k);
  m.def("w_k", [](const Graph& g, int k) { return members(w_k(g, k)); });
  m.def("q_value", &q_value);
  m.def("blocks", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (VertexSet b : block_decomposition(g).blocks) out.push_back(members(b));
    return out;
  });

  m.def("extremal_chain", &extremal_chain, py::arg("k"), py::arg("m"));
  m.def("clique_path", &clique_path, py::arg("k"), py::arg("m"));
  m.def("enumerate_gallai_trees", &enumerate_gallai_trees, py::arg("k"), py::arg("n_max"));
  m.def(
      "verify_trees",
      [](int k, int n_max) {
        const TreeVerification v = verify_trees(k, n_max);
        return py::dict(py::arg("trees_checked") = v.trees_checked, py::arg("tight") = v.tight,
                        py::arg("violations") = v.violators.size());
      },
      py::arg("k"), py::arg("n_max"));

  m.def(
      "table1_row",
      [](int k) {
        const Table1Row row = table1_row(k);
        py::dict out;
        for (Table1Column c : kTable1Columns) out[py::str(column_name(c))] = row.cell(c).display;
        return out;
      },
      py::arg("k"));
  m.def(
      "main_bound",
      [](int k, const std::string& name) {
        return rational_string(main_bound(k, MainVariant::Auto, preset(parse_preset(name), k)));
      },
      py::arg("k"), py::arg("preset") = "smallP");
  m.def(
      "parameter_conditions",
      [](int k, const std::string& name) {
        const BoundParams bp = preset(parse_preset(name), k);
        return (k >= 7 ? check_thm41(bp) : check_thm43(bp)).failed();
      },
      py::arg("k"), py::arg("preset") = "smallP");

  m.def("chromatic_number", [](const Graph& g) { return chromatic_number(g); });
  m.def("is_f_choosable", [](const Graph& g, const FVector& f) { return is_f_choosable(g, f).choosable; });
  m.def("is_f_paintable", [](const Graph& g, const FVector& f) { return is_f_paintable(g, f); });
  m.def("is_f_AT", [](const Graph& g, const FVector& f) -> std::optional<std::vector<int>> {
    if (auto cert = is_f_AT(g, f)) return cert->orientation.out_degrees();
    return std::nullopt;
  });
  m.def("at_number", [](const Graph& g) { return at_number(g); });
  m.def(
      "is_critical",
      [](const Graph& g, int k, const std::string& notion) { return is_critical(g, k, parse_notion(notion)); },
      py::arg("g"), py::arg("k"), py::arg("notion") = "chromatic");

  m.def(
      "gallai_discharge",
      [](const Graph& g, int k) {
        const GallaiDischargeReport r = run_gallai_discharge(g, k);
        std::vector<std::string> final;
        for (const Rational& x : r.ledger.final) final.push_back(rational_string(x));
        return py::dict(py::arg("final") = final, py::arg("min_final") = rational_string(r.min_final),
                        py::arg("target") = rational_string(r.target),
                        py::arg("all_meet_target") = r.all_meet_target);
      },
      py::arg("g"), py::arg("k"));

  m.def(
      "single_high_check",
      [](const Graph& g, int x, int k) {
        const ReducibilityReport r = check_lemma51(g, x, k);
        return py::dict(py::arg("failed") = r.failed(), py::arg("status") = status_name(r.status));
      },
      py::arg("g"), py::arg("x"), py::arg("k"));

  m.def(
      "command",
      [](const std::string& name, const Graph& g, int k) {
        cli::Result r;
        if (name == "analyze") {
          r = cli::analyze(g, k);
        } else if (name == "discharge") {
          r = cli::discharge(g, k, "smallP", "auto");
        } else if (name == "critical") {
          r = cli::critical(g, k, "chromatic", {});
        } else {
          throw PreconditionError("unsupported command '" + name + "' (analyze, discharge, critical)");
        }
        r.doc.erase("runtime_ms");
        return r.doc.dump();
      },
      py::arg("name"), py::arg("g"), py::arg("k"),
      "JSON report of a graph command, without the runtime field.");
}
