#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qspec/cli.hpp"
#include "qspec/closed_forms.hpp"
#include "qspec/conjectures.hpp"
#include "qspec/graph.hpp"
#include "qspec/graph_io.hpp"
#include "qspec/spectral.hpp"

namespace py = pybind11;
using namespace qspec;

namespace {

std::vector<std::pair<double, int>> pairs_of(const ClosedFormSpectrum& s) {
  std::vector<std::pair<double, int>> out;
  for (const auto& p : s.pairs()) out.emplace_back(p.value, p.multiplicity);
  return out;
}

std::vector<Edge> edges_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> e;
  for (const auto& [u, v] : pairs) e.push_back({u, v});
  return e;
}

std::vector<std::pair<int, int>> pairs_from_edges(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signless Laplacian spectral toolkit";
  m.attr("__version__") = kToolVersion;

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             const auto e = edges_from_pairs(edges);
             return Graph::from_edges(n, e);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", [](const Graph& g) { return pairs_from_edges(g.edges()); })
      .def("degrees", &Graph::degrees)
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<ComponentSummary>(m, "ComponentSummary")
      .def_readonly("total_components", &ComponentSummary::total_components)
      .def_readonly("bipartite_components", &ComponentSummary::bipartite_components)
      .def_readonly("is_connected", &ComponentSummary::is_connected)
      .def_readonly("is_bipartite", &ComponentSummary::is_bipartite);

  m.def("complete", &complete, py::arg("n"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("r"), py::arg("s"));
  m.def("path", &path, py::arg("n"));
  m.def("cycle", &cycle, py::arg("n"));
  m.def("join", &join);
  m.def("disjoint_union", &disjoint_union);
  m.def("join_split", &join_split, py::arg("n"), py::arg("k"), py::arg("r"));
  m.def("delete_edge", &delete_edge);
  m.def("components", &components);
  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("to_graph6", &to_graph6);
  m.def("from_graph6", [](const std::string& s) { return from_graph6(s); });

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("values", &Spectrum::values)
      .def_readonly("zero_count", &Spectrum::zero_count)
      .def_readonly("tol_zero", &Spectrum::tol_zero);
  m.def("spectrum_of", &spectrum_of);
  m.def("s_alpha", &s_alpha, py::arg("spectrum"), py::arg("alpha"));

  m.def("spectrum_complete", [](int n) { return pairs_of(spectrum_complete(n)); });
  m.def("spectrum_complete_bipartite", [](int r, int s) { return pairs_of(spectrum_complete_bipartite(r, s)); });
  m.def("spectrum_join_split", [](int n, int k, int r) { return pairs_of(spectrum_join_split(n, k, r)); });
  m.def(
      "quotient_eigenvalues",
      [](const Graph& g, const std::vector<std::vector<int>>& cells) {
        return quotient_eigenvalues(quotient_matrix(g, EquitablePartition{cells}));
      },
      py::arg("graph"), py::arg("cells"));
  m.def("bipartite_bound", &bipartite_bound, py::arg("n"), py::arg("alpha"));
  m.def("connectivity_bound", &connectivity_bound, py::arg("n"), py::arg("k"), py::arg("alpha"));

  m.def("f_profile", &f_profile, py::arg("x"), py::arg("alpha"));
  m.def("g_profile", &g_profile, py::arg("x"), py::arg("n"), py::arg("alpha"));
  m.def("p_coefficient", [](double alpha) {
    const auto p = p_coefficient(alpha);
    return std::make_pair(p.p, p.argmax);
  });
  m.def("zeta", [](int n, double alpha) {
    const auto z = zeta(n, alpha);
    return std::make_pair(z.value, z.best_r);
  });

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("context", &BoundReport::context)
      .def_readonly("n", &BoundReport::n)
      .def_readonly("alpha", &BoundReport::alpha)
      .def_readonly("param2", &BoundReport::param2)
      .def_readonly("bound_value", &BoundReport::bound_value)
      .def_readonly("achieved_value", &BoundReport::achieved_value)
      .def_readonly("witness", &BoundReport::witness)
      .def_readonly("witness_is_extremal", &BoundReport::witness_is_extremal)
      .def_readonly("unique_extremal", &BoundReport::unique_extremal)
      .def_readonly("graphs_examined", &BoundReport::graphs_examined)
      .def_property_readonly("margin", &BoundReport::margin)
      .def_property_readonly("verdict", [](const BoundReport& r) { return std::string(to_string(r.verdict)); });

  py::class_<CounterexampleReport>(m, "CounterexampleReport")
      .def_readonly("conjecture", &CounterexampleReport::conjecture)
      .def_readonly("alpha", &CounterexampleReport::alpha)
      .def_readonly("n", &CounterexampleReport::n)
      .def_readonly("param2", &CounterexampleReport::param2)
      .def_readonly("r", &CounterexampleReport::r)
      .def_readonly("lhs", &CounterexampleReport::lhs)
      .def_readonly("rhs", &CounterexampleReport::rhs)
      .def_readonly("margin", &CounterexampleReport::margin)
      .def_readonly("witness", &CounterexampleReport::witness)
      .def_readonly("numeric_lhs", &CounterexampleReport::numeric_lhs);

  m.def("verify_conjecture1", &verify_conjecture1, py::arg("alpha"), py::arg("n_max"));
  m.def(
      "find_counterexample_conj1",
      [](double alpha, int n_max) { return find_counterexample_conj1(alpha, n_max); }, py::arg("alpha"),
      py::arg("n_max"));
  m.def(
      "find_counterexample_conj2",
      [](double alpha, int k, int n_max, bool full_r_scan) {
        SearchOptions opts;
        opts.full_r_scan = full_r_scan;
        return find_counterexample_conj2(alpha, k, n_max, opts);
      },
      py::arg("alpha"), py::arg("k"), py::arg("n_max"), py::arg("full_r_scan") = false);
  m.def(
      "exhaustive_verify",
      [](int n, double alpha, const std::string& mode, int k, bool include_disconnected, int jobs) {
        ExhaustiveOptions opts;
        opts.k = k;
        opts.include_disconnected = include_disconnected;
        opts.jobs = jobs;
        if (mode != "connectivity" && mode != "bipartite") {
          throw std::invalid_argument("mode must be bipartite or connectivity");
        }
        const auto md = mode == "connectivity" ? ExhaustiveMode::connectivity : ExhaustiveMode::bipartite;
        py::gil_scoped_release release;
        return exhaustive_verify(n, alpha, md, opts);
      },
      py::arg("n"), py::arg("alpha"), py::arg("mode") = "bipartite", py::arg("k") = 1,
      py::arg("include_disconnected") = false, py::arg("jobs") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::ostringstream out;
        std::ostringstream err;
        std::istringstream in(stdin_text);
        const int code = run_cli(args, out, err, in);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
