#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ising/anneal.hpp"
#include "ising/errors.hpp"
#include "ising/evaluate.hpp"
#include "ising/gen.hpp"
#include "ising/graph.hpp"
#include "ising/model.hpp"

namespace py = pybind11;
using namespace ising;

PYBIND11_MODULE(pyising, m) {
  m.doc() = "Ising annealing solver for balanced min-cut graph partitioning";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<capacity_error>(m, "CapacityError", PyExc_ValueError);

  py::class_<Edge>(m, "Edge")
      .def(py::init<std::int32_t, std::int32_t, std::int32_t>(), py::arg("u"),
           py::arg("v"), py::arg("weight") = 1)
      .def_readwrite("u", &Edge::u)
      .def_readwrite("v", &Edge::v)
      .def_readwrite("weight", &Edge::weight)
      .def("__repr__", [](const Edge& e) {
        return "Edge(" + std::to_string(e.u) + ", " + std::to_string(e.v) +
               ", " + std::to_string(e.weight) + ")";
      });

  py::class_<Graph>(m, "Graph")
      .def_static("parse_gset",
                  [](const std::string& text) { return Graph::parse_gset(text); },
                  py::arg("text"))
      .def_static("parse_gset_file", &Graph::parse_gset_file, py::arg("path"))
      .def_static(
          "from_edges",
          [](std::int32_t n, const std::vector<Edge>& edges) {
            return Graph::from_edges(n, edges);
          },
          py::arg("num_nodes"), py::arg("edges"))
      .def_property_readonly("num_nodes", &Graph::num_nodes)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def_property_readonly("all_unit_weights", &Graph::all_unit_weights)
      .def("degree", &Graph::degree, py::arg("node"))
      .def("neighbors",
           [](const Graph& g, std::int32_t v) {
             std::vector<std::pair<std::int32_t, std::int32_t>> out;
             for (const Neighbor& nb : g.neighbors(v))
               out.emplace_back(nb.node, nb.weight);
             return out;
           },
           py::arg("node"))
      .def("edges", &Graph::edges)
      .def("to_gset", &Graph::to_gset)
      .def("with_unit_weights", &Graph::with_unit_weights)
      .def("__repr__", [](const Graph& g) {
        return "Graph(num_nodes=" + std::to_string(g.num_nodes()) +
               ", num_edges=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("density", &density, py::arg("graph"));

  m.def("random_graph", &random_graph, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("torus_graph", &torus_graph, py::arg("rows"), py::arg("cols"), py::arg("seed"));
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("random_connected_gnp", &random_connected_gnp, py::arg("n"), py::arg("p"),
        py::arg("seed"));

  py::class_<Coefficients>(m, "Coefficients")
      .def(py::init<std::int64_t, std::int64_t, std::int64_t>(),
           py::arg("a_num") = 1, py::arg("b_num") = 1, py::arg("denom") = 1)
      .def_readwrite("a_num", &Coefficients::a_num)
      .def_readwrite("b_num", &Coefficients::b_num)
      .def_readwrite("denom", &Coefficients::denom)
      .def_property_readonly("a", &Coefficients::a)
      .def_property_readonly("b", &Coefficients::b)
      .def("__repr__", [](const Coefficients& c) {
        return "Coefficients(a=" + std::to_string(c.a()) +
               ", b=" + std::to_string(c.b()) + ")";
      });

  m.def("coefficients_for", &coefficients_for, py::arg("graph"),
        py::arg("b_num") = 1, py::arg("b_den") = 1);
  m.def("solver_default_coefficients", &solver_default_coefficients);

  py::class_<MinCutProblem>(m, "MinCutProblem")
      .def_static("make", &MinCutProblem::make, py::arg("graph"),
                  py::arg("coefficients"),
                  py::arg("external_field") = std::vector<std::int64_t>{})
      .def_static("make_unchecked", &MinCutProblem::make_unchecked,
                  py::arg("graph"), py::arg("coefficients"),
                  py::arg("external_field") = std::vector<std::int64_t>{})
      .def_static("with_default_coefficients",
                  &MinCutProblem::with_default_coefficients, py::arg("graph"))
      .def_property_readonly("graph", &MinCutProblem::graph,
                             py::return_value_policy::reference_internal)
      .def_property_readonly("coefficients", &MinCutProblem::coefficients)
      .def("satisfies_coefficient_rule", &MinCutProblem::satisfies_coefficient_rule);

  m.def("local_field", &local_field, py::arg("problem"), py::arg("state"),
        py::arg("node"));

  py::class_<CandidateEnergies>(m, "CandidateEnergies")
      .def_readonly("at_minus_scaled", &CandidateEnergies::at_minus_scaled)
      .def_readonly("at_plus_scaled", &CandidateEnergies::at_plus_scaled)
      .def_readonly("denom", &CandidateEnergies::denom)
      .def_property_readonly("at_minus", &CandidateEnergies::at_minus)
      .def_property_readonly("at_plus", &CandidateEnergies::at_plus);

  m.def("candidate_energies_mincut", &candidate_energies_mincut,
        py::arg("problem"), py::arg("state"), py::arg("balance_excl"),
        py::arg("node"));
  m.def("global_hamiltonian", &global_hamiltonian, py::arg("problem"),
        py::arg("state"));
  m.def("global_hamiltonian_scaled", &global_hamiltonian_scaled,
        py::arg("problem"), py::arg("state"));

  m.def("cut_value", &cut_value, py::arg("graph"), py::arg("state"));
  m.def("imbalance", &imbalance, py::arg("state"));

  py::class_<PartitionScore>(m, "PartitionScore")
      .def_readonly("cut", &PartitionScore::cut)
      .def_readonly("imbalance", &PartitionScore::imbalance)
      .def_readonly("hamiltonian_scaled", &PartitionScore::hamiltonian_scaled)
      .def_readonly("hamiltonian", &PartitionScore::hamiltonian)
      .def("__repr__", [](const PartitionScore& s) {
        return "PartitionScore(cut=" + std::to_string(s.cut) +
               ", imbalance=" + std::to_string(s.imbalance) + ")";
      });

  m.def("score", &score, py::arg("problem"), py::arg("state"));

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("cut", &OracleResult::cut)
      .def_readonly("witness", &OracleResult::witness);

  m.def("brute_force_balanced_mincut", &brute_force_balanced_mincut,
        py::arg("graph"), py::arg("max_imbalance"));

  py::enum_<Strategy>(m, "Strategy")
      .value("standard", Strategy::standard)
      .value("gdi", Strategy::gdi);

  py::class_<AnnealParams>(m, "AnnealParams")
      .def(py::init<>())
      .def_readwrite("sweeps", &AnnealParams::sweeps)
      .def_readwrite("flip_fraction0", &AnnealParams::flip_fraction0)
      .def_readwrite("decay_rate", &AnnealParams::decay_rate)
      .def_readwrite("strategy", &AnnealParams::strategy)
      .def_readwrite("workers", &AnnealParams::workers)
      .def_readwrite("seed", &AnnealParams::seed)
      .def_readwrite("deterministic", &AnnealParams::deterministic);

  m.def("default_params_for", &default_params_for, py::arg("strategy"),
        py::arg("graph"));
  m.def("flip_probability", &flip_probability, py::arg("params"),
        py::arg("sweep_index"));

  py::class_<TraceRecord>(m, "TraceRecord")
      .def_readonly("hamiltonian_scaled", &TraceRecord::hamiltonian_scaled)
      .def_readonly("hamiltonian", &TraceRecord::hamiltonian)
      .def_readonly("cut", &TraceRecord::cut)
      .def_readonly("imbalance", &TraceRecord::imbalance)
      .def_readonly("flip_probability", &TraceRecord::flip_probability)
      .def_readonly("seconds", &TraceRecord::seconds);

  py::class_<AnnealResult>(m, "AnnealResult")
      .def_readonly("state", &AnnealResult::state)
      .def_readonly("trace", &AnnealResult::trace)
      .def_readonly("seconds", &AnnealResult::seconds);

  m.def(
      "anneal",
      [](const MinCutProblem& problem, const AnnealParams& params) {
        py::gil_scoped_release release;
        return anneal(problem, params);
      },
      py::arg("problem"), py::arg("params"));
}
