#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcwalk/acceptance.hpp"
#include "qcwalk/bounds.hpp"
#include "qcwalk/dynamics.hpp"
#include "qcwalk/exact.hpp"
#include "qcwalk/graph.hpp"
#include "qcwalk/harness.hpp"
#include "qcwalk/schedule.hpp"
#include "qcwalk/spectral.hpp"
#include "qcwalk/time_varying.hpp"
#include "qcwalk/walkers.hpp"

namespace py = pybind11;
using namespace qcwalk;

namespace {

ProcessKind parse_kind(const std::string& kind) {
  if (kind == "original") return ProcessKind::original;
  if (kind == "virtual") return ProcessKind::virtual_;
  throw std::invalid_argument("kind must be 'original' or 'virtual'");
}

DownReading parse_reading(const std::string& reading) {
  if (reading == "class_mass") return DownReading::class_mass;
  if (reading == "single_target") return DownReading::single_target;
  throw std::invalid_argument("reading must be 'class_mass' or 'single_target'");
}

GraphSequence::Mode parse_mode(const std::string& mode) {
  if (mode == "periodic") return GraphSequence::Mode::periodic;
  if (mode == "random") return GraphSequence::Mode::random_pool;
  throw std::invalid_argument("mode must be 'periodic' or 'random'");
}

}  // namespace

PYBIND11_MODULE(_qcwalk, mod) {
  mod.doc() = "unbiased quantized consensus laboratory";

  py::register_exception<check_error>(mod, "CheckError");

  py::class_<Graph>(mod, "Graph")
      .def_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_readonly("edges", &Graph::edges)
      .def_readonly("degrees", &Graph::degree)
      .def_readonly("connected", &Graph::connected)
      .def_readonly("name", &Graph::name)
      .def("has_edge", &Graph::has_edge)
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + (g.name.empty() ? "n=" + std::to_string(g.n) : g.name) + " m=" +
               std::to_string(g.m()) + ">";
      });

  mod.def("build_graph", &build_graph, py::arg("n"), py::arg("edges"));
  mod.def("make_line", &make_line);
  mod.def("make_cycle", &make_cycle);
  mod.def("make_star", &make_star);
  mod.def("make_complete", &make_complete);
  mod.def("make_double_star", &make_double_star, py::arg("i"), py::arg("k"), py::arg("n"));
  mod.def("make_lollipop", &make_lollipop);
  mod.def("make_semi_regular", &make_semi_regular, py::arg("n"), py::arg("k"));
  mod.def("make_random_connected", &make_random_connected, py::arg("n"), py::arg("p"),
          py::arg("seed"));
  mod.def("make_petersen", &make_petersen);
  mod.def("parse_graph_spec", &parse_graph_spec);
  mod.def("diameter", &diameter);
  mod.def("cartesian_square", &cartesian_square);
  mod.def("adjacency_matrix", &adjacency_matrix);
  mod.def("laplacian_matrix", &laplacian_matrix);

  py::class_<AssumptionReport>(mod, "AssumptionReport")
      .def_readonly("holds", &AssumptionReport::holds)
      .def_readonly("worst_u", &AssumptionReport::worst_u)
      .def_readonly("worst_v", &AssumptionReport::worst_v)
      .def_readonly("worst_degree_sum", &AssumptionReport::worst_degree_sum)
      .def_readonly("failure_shape", &AssumptionReport::failure_shape);
  mod.def("assumption_check", &assumption_check);

  py::class_<OpinionProfile>(mod, "OpinionProfile")
      .def_readonly("values", &OpinionProfile::values)
      .def_readonly("total", &OpinionProfile::total)
      .def("__len__", &OpinionProfile::size);
  mod.def("make_profile", &make_profile);
  mod.def("parse_profile", &parse_profile, py::arg("spec"), py::arg("n"));
  mod.def("quantized_update", &quantized_update, py::arg("x"), py::arg("i"), py::arg("j"));
  mod.def("is_nontrivial", &is_nontrivial);
  mod.def("lyapunov", &lyapunov);
  mod.def("lyapunov_scaled", &lyapunov_scaled);
  mod.def("nontrivial_budget", &nontrivial_budget);
  mod.def("in_consensus", &in_consensus);

  py::class_<RunTrace>(mod, "RunTrace")
      .def_readonly("steps_to_consensus", &RunTrace::steps_to_consensus)
      .def_readonly("nontrivial_updates", &RunTrace::nontrivial_updates)
      .def_readonly("lyapunov_series", &RunTrace::lyapunov_series)
      .def_readonly("terminated", &RunTrace::terminated)
      .def_readonly("seed", &RunTrace::seed);
  mod.def(
      "run_consensus",
      [](const Graph& g, const OpinionProfile& x0, std::uint64_t seed, long long max_steps,
         bool record) { return run_consensus(g, x0, seed, max_steps, record); },
      py::arg("graph"), py::arg("profile"), py::arg("seed"),
      py::arg("max_steps") = kDefaultMaxSteps, py::arg("record_lyapunov") = false);
  mod.def(
      "run_consensus_tv",
      [](const GraphSequence& seq, const OpinionProfile& x0, std::uint64_t seed,
         long long max_steps, bool record) { return run_consensus(seq, x0, seed, max_steps, record); },
      py::arg("schedule"), py::arg("profile"), py::arg("seed"),
      py::arg("max_steps") = kDefaultMaxSteps, py::arg("record_lyapunov") = false);

  mod.def("virtual_edge_distribution", [](const Graph& g, int a, int b) {
    return virtual_edge_distribution(g, {a, b});
  });
  py::class_<PairEstimate>(mod, "PairEstimate")
      .def_readonly("start_a", &PairEstimate::start_a)
      .def_readonly("start_b", &PairEstimate::start_b)
      .def_readonly("mean", &PairEstimate::mean)
      .def_readonly("stderr", &PairEstimate::stderr_)
      .def_readonly("trials", &PairEstimate::trials)
      .def_readonly("censored", &PairEstimate::censored);
  py::class_<MaxMeetingEstimate>(mod, "MaxMeetingEstimate")
      .def_readonly("pairs", &MaxMeetingEstimate::pairs)
      .def_readonly("max_mean", &MaxMeetingEstimate::max_mean)
      .def_readonly("max_stderr", &MaxMeetingEstimate::max_stderr)
      .def_readonly("argmax_a", &MaxMeetingEstimate::argmax_a)
      .def_readonly("argmax_b", &MaxMeetingEstimate::argmax_b);
  mod.def(
      "estimate_max_meeting",
      [](const std::string& kind, const Graph& g, long long trials, std::uint64_t seed,
         long long cap) { return estimate_max_meeting(parse_kind(kind), g, trials, seed, nullptr, cap); },
      py::arg("kind"), py::arg("graph"), py::arg("trials"), py::arg("seed"),
      py::arg("cap") = kWalkerStepCap);

  mod.def("hitting_table", [](const Graph& g, bool lazy) {
    return hitting_table(lazy ? lazy_transition_matrix(g) : simple_transition_matrix(g));
  }, py::arg("graph"), py::arg("lazy") = true);
  mod.def("resistance_matrix", &resistance_matrix);
  mod.def("potential_table", &potential_table);
  mod.def("lazy_hitting_max", &lazy_hitting_max);
  mod.def("hidden_vertices", [](const Graph& g, bool lazy) {
    return hidden_vertices(lazy ? lazy_transition_matrix(g) : simple_transition_matrix(g));
  }, py::arg("graph"), py::arg("lazy") = true);

  py::class_<MeetingTable>(mod, "MeetingTable")
      .def_readonly("times", &MeetingTable::times)
      .def_readonly("max_time", &MeetingTable::max_time)
      .def_readonly("argmax_x", &MeetingTable::argmax_x)
      .def_readonly("argmax_y", &MeetingTable::argmax_y);
  mod.def("meeting_table", [](const Graph& g, const std::string& kind) {
    return exact_meeting_times(g, parse_kind(kind));
  }, py::arg("graph"), py::arg("kind") = "original");

  mod.def("laplacian_spectrum", [](const Graph& g) {
    return symmetric_spectrum(laplacian_matrix(g)).values;
  });
  mod.def("random_target_residual",
          [](const Graph& g) { return random_target_residual(lazy_transition_matrix(g)); });
  mod.def("product_spectrum_check", &product_spectrum_check);
  py::class_<ContractionReport>(mod, "ContractionReport")
      .def_readonly("alpha2_kbar", &ContractionReport::alpha2_kbar)
      .def_readonly("alpha_min_kbar", &ContractionReport::alpha_min_kbar)
      .def_readonly("alpha2_lazy", &ContractionReport::alpha2_lazy)
      .def_readonly("alpha_min_from_laplacian", &ContractionReport::alpha_min_from_laplacian)
      .def_readonly("exact_factor", &ContractionReport::exact_factor)
      .def_readonly("claimed_bound", &ContractionReport::claimed_bound)
      .def_readonly("flagged", &ContractionReport::flagged);
  mod.def("contraction_factor", &contraction_factor);

  py::class_<BDChain>(mod, "BDChain")
      .def_readonly("num_classes", &BDChain::num_classes)
      .def_readonly("class_size", &BDChain::class_size)
      .def_readonly("p_down", &BDChain::p_down)
      .def_readonly("p_stay", &BDChain::p_stay)
      .def_readonly("p_up", &BDChain::p_up);
  mod.def("birth_death_chain", [](const Graph& g, const std::string& reading) {
    return birth_death_chain(g, parse_reading(reading));
  }, py::arg("graph"), py::arg("reading") = "class_mass");
  mod.def("bd_hitting_bound", &bd_hitting_bound, py::arg("chain"), py::arg("start"));
  mod.def("star_closed_form", &star_closed_form);
  mod.def("time_varying_bound", &time_varying_bound, py::arg("n"), py::arg("m_max"),
          py::arg("d_max"));

  py::class_<BoundCheck>(mod, "BoundCheck")
      .def_readonly("name", &BoundCheck::name)
      .def_readonly("value", &BoundCheck::value)
      .def_readonly("reference", &BoundCheck::reference)
      .def_readonly("violated", &BoundCheck::violated)
      .def_readonly("diagnostic", &BoundCheck::diagnostic);
  py::class_<BoundReport>(mod, "BoundReport")
      .def_readonly("graph", &BoundReport::graph)
      .def_readonly("checks", &BoundReport::checks)
      .def("any_hard_violation", &BoundReport::any_hard_violation);
  mod.def("theorem_bounds", &theorem3_bounds);
  mod.def("corollary_formulas", [](const std::string& family, int n) {
    if (family == "line") return corollary_formulas(LineFamily::line, n);
    if (family == "cycle") return corollary_formulas(LineFamily::cycle, n);
    throw std::invalid_argument("family must be 'line' or 'cycle'");
  });

  py::class_<GraphSequence>(mod, "GraphSequence")
      .def_readonly("n", &GraphSequence::n)
      .def_readonly("m_max", &GraphSequence::m_max)
      .def_readonly("d_max", &GraphSequence::d_max)
      .def("period", &GraphSequence::period)
      .def("graph_at", &GraphSequence::graph_at, py::return_value_policy::reference_internal);
  mod.def("make_schedule", [](const std::vector<std::string>& specs, const std::string& mode,
                              std::uint64_t seed) {
    std::vector<Graph> members;
    members.reserve(specs.size());
    for (const auto& s : specs) members.push_back(parse_graph_spec(s));
    return sequence_schedule(std::move(members), parse_mode(mode), seed);
  }, py::arg("specs"), py::arg("mode") = "periodic", py::arg("seed") = 0);

  py::class_<MixingTrace>(mod, "MixingTrace")
      .def_readonly("norms", &MixingTrace::norms)
      .def_readonly("claimed", &MixingTrace::claimed)
      .def_readonly("flagged_steps", &MixingTrace::flagged_steps);
  mod.def("mixing_trace", [](const GraphSequence& seq, int a, int b, int horizon) {
    return mixing_trace(seq, pair_point_mass(seq.n, a, b), horizon);
  }, py::arg("schedule"), py::arg("a"), py::arg("b"), py::arg("horizon") = 100);

  py::class_<TvMeetingReport>(mod, "TvMeetingReport")
      .def_readonly("mean", &TvMeetingReport::mean)
      .def_readonly("stderr", &TvMeetingReport::stderr_)
      .def_readonly("bound", &TvMeetingReport::bound)
      .def_readonly("within_bound", &TvMeetingReport::within_bound)
      .def_readonly("trials", &TvMeetingReport::trials)
      .def_readonly("censored", &TvMeetingReport::censored);
  mod.def("meeting_time_tv", [](const GraphSequence& seq, int a, int b, long long trials,
                                std::uint64_t seed) {
    return meeting_time_tv(seq, {a, b}, trials, seed);
  }, py::arg("schedule"), py::arg("a"), py::arg("b"), py::arg("trials") = 500,
          py::arg("seed") = 0);

  mod.def("run_experiment", [](const std::string& kind,
                               const std::map<std::string, std::string>& fields) {
    ExperimentConfig cfg;
    cfg.kind = kind;
    cfg.fields = fields;
    ExperimentResult res = run_experiment(cfg);
    return py::make_tuple(res.body, res.ok);
  }, py::arg("kind"), py::arg("fields"));

  py::class_<CriterionResult>(mod, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("title", &CriterionResult::title)
      .def_readonly("passed", &CriterionResult::passed)
      .def_readonly("detail", &CriterionResult::detail)
      .def_readonly("seconds", &CriterionResult::seconds);
  mod.def("run_acceptance_suite", [](std::uint64_t seed) { return run_acceptance_suite(seed); },
          py::arg("seed") = kSuiteSeed);
}
