#include "qcwalk/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "qcwalk/bounds.hpp"
#include "qcwalk/dynamics.hpp"
#include "qcwalk/exact.hpp"
#include "qcwalk/harness.hpp"
#include "qcwalk/spectral.hpp"
#include "qcwalk/time_varying.hpp"
#include "qcwalk/walkers.hpp"

namespace qcwalk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sig(double v) { return format_sig(v); }

// ---- 1. meeting time of the modified walk equals half the lazy hitting time
CriterionResult criterion_half_hitting() {
  auto t0 = Clock::now();
  CriterionResult r{1, "virtual meeting table equals half the lazy hitting table", false, "", 0};
  double worst = 0;
  std::string worst_graph = "-", failing;
  for (const auto& e : assumption_corpus()) {
    Eigen::MatrixXd m = exact_meeting_times(e.graph, ProcessKind::virtual_).times;
    Eigen::MatrixXd h = hitting_table(lazy_transition_matrix(e.graph));
    double dev = (m - 0.5 * h).cwiseAbs().maxCoeff();
    if (dev > worst) {
      worst = dev;
      worst_graph = e.label;
    }
    if (dev > 1e-8) failing += (failing.empty() ? "" : ",") + e.label;
  }
  r.seconds = seconds_since(t0);
  r.passed = failing.empty() && r.seconds < 20.0;
  r.detail = "worst |M - H/2| = " + sig(worst) + " on " + worst_graph + " (tol 1e-8)";
  if (!failing.empty()) r.detail += "; failing: " + failing;
  return r;
}

// ---- 2. worst original meeting time sandwiched by the virtual one
CriterionResult criterion_factor_two() {
  auto t0 = Clock::now();
  CriterionResult r{2, "max virtual meeting <= worst meeting <= twice max virtual", false, "", 0};
  double min_lower_slack = 1e300, min_upper_slack = 1e300;
  std::string failing;
  for (const auto& e : assumption_corpus()) {
    double max_m = exact_meeting_times(e.graph, ProcessKind::virtual_).max_time;
    double tbar = exact_meeting_times(e.graph, ProcessKind::original).max_time;
    min_lower_slack = std::min(min_lower_slack, tbar - max_m);
    min_upper_slack = std::min(min_upper_slack, 2.0 * max_m - tbar);
    if (max_m > tbar + 1e-8 || tbar > 2.0 * max_m + 1e-8)
      failing += (failing.empty() ? "" : ",") + e.label;
  }
  r.passed = failing.empty();
  r.detail = "min slack lower/upper = " + sig(min_lower_slack) + "/" + sig(min_upper_slack);
  if (!failing.empty()) r.detail += "; failing: " + failing;
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 3. half-lazy <= worst meeting <= lazy <= 2nmD, plus pinned spot values
CriterionResult criterion_sandwich() {
  auto t0 = Clock::now();
  CriterionResult r{3, "hitting-time sandwich on the degree-sum corpus + spot values", false, "", 0};
  std::string failing;
  for (const auto& e : assumption_corpus()) {
    double hz = lazy_hitting_max(e.graph);
    double tbar = exact_meeting_times(e.graph, ProcessKind::original).max_time;
    double cap = 2.0 * e.graph.n * e.graph.m() * diameter(e.graph);
    if (0.5 * hz > tbar + 1e-8 || tbar > hz + 1e-8 || hz > cap + 1e-8)
      failing += (failing.empty() ? "" : ",") + e.label;
  }
  // spot values fixed by independent hand solves
  std::string spots;
  {
    Graph c4 = make_cycle(4);
    double tbar = exact_meeting_times(c4, ProcessKind::original).max_time;
    double h02 = hitting_table(lazy_transition_matrix(c4))(0, 2);
    double m02 = exact_meeting_times(c4, ProcessKind::virtual_).times(0, 2);
    if (std::abs(tbar - 7.0) > 1e-8 || std::abs(h02 - 8.0) > 1e-8 || std::abs(m02 - 4.0) > 1e-8)
      spots += " C4";
    Graph c5 = make_cycle(5);
    if (std::abs(exact_meeting_times(c5, ProcessKind::original).max_time - 12.5) > 1e-8 ||
        std::abs(lazy_hitting_max(c5) - 15.0) > 1e-8)
      spots += " C5";
    Graph p3 = make_line(3);
    if (std::abs(exact_meeting_times(p3, ProcessKind::original).max_time - 4.0) > 1e-8 ||
        std::abs(lazy_hitting_max(p3) - 6.0) > 1e-8)
      spots += " line3";
  }
  r.passed = failing.empty() && spots.empty();
  r.detail = spots.empty() ? "spot values C4/C5/line3 reproduced" : "spot mismatches:" + spots;
  if (!failing.empty()) r.detail += "; sandwich failing: " + failing;
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 4. star closed form, star lazy hitting, double-star quadratic fit
CriterionResult criterion_star_family() {
  auto t0 = Clock::now();
  CriterionResult r{4, "star worst meeting m(m+2)/2; star lazy hitting; double-star c*m^2 fit", false,
                    "", 0};
  std::string bad;
  for (int n = 3; n <= 8; ++n) {
    Graph star = make_star(n);
    int m = star.m();
    double tbar = exact_meeting_times(star, ProcessKind::original).max_time;
    if (std::abs(tbar - star_closed_form(m)) > 1e-8) bad += " star_meeting(m=" + std::to_string(m) + ")";
    // Direct solves give n(n-1); the n(n-1)/2 sometimes quoted for this value
    // contradicts the pinned line-3 hitting time (6, same graph at n=3) and is
    // reported as a flagged variant instead of asserted.
    double hz = lazy_hitting_max(star);
    if (std::abs(hz - static_cast<double>(n) * (n - 1)) > 1e-8)
      bad += " star_hitting(n=" + std::to_string(n) + ")";
  }
  double fit = 0;
  int family_size = 0;
  for (int i = 2; i <= 5; ++i)
    for (int k = 1; k <= i - 1; ++k)
      for (int m = 5; m <= 9; ++m) {
        int n = m + 1 - k;
        if (n - 1 - i < 0) continue;
        Graph g = make_double_star(i, k, n);
        QCW_CHECK(g.m() == m, "double-star edge count drifted");
        double tbar = exact_meeting_times(g, ProcessKind::original).max_time;
        fit = std::max(fit, tbar / (static_cast<double>(m) * m));
        ++family_size;
      }
  if (family_size == 0 || fit > 1.0) bad += " double_star_fit";
  r.passed = bad.empty();
  r.detail = "double-star fit c = " + sig(fit) + " over " + std::to_string(family_size) +
             " members; halved star-hitting variant flagged (reported, not asserted)";
  if (!bad.empty()) r.detail += "; failing:" + bad;
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 5. resistance-form hitting identities
CriterionResult criterion_resistance_identities() {
  auto t0 = Clock::now();
  CriterionResult r{5, "resistance forms match absorbing solves; printed lazy variant reported",
                    false, "", 0};
  double worst_simple = 0, worst_lazy = 0;
  for (const auto& e : standard_corpus()) {
    Eigen::MatrixXd h_simple = hitting_table(simple_transition_matrix(e.graph));
    Eigen::MatrixXd h_lazy = hitting_table(lazy_transition_matrix(e.graph));
    for (int a = 0; a < e.graph.n; ++a)
      for (int z = 0; z < e.graph.n; ++z) {
        if (a == z) continue;
        ResistanceHitting rh = hitting_from_resistance(e.graph, a, z);
        worst_simple = std::max(worst_simple, std::abs(rh.h_simple - h_simple(a, z)));
        worst_lazy = std::max(worst_lazy, std::abs(rh.h_lazy_corrected - h_lazy(a, z)));
      }
  }
  ResistanceHitting line3 = hitting_from_resistance(make_line(3), 0, 2);
  bool variant_differs = std::abs(line3.h_lazy_paper - 10.0) <= 1e-8 &&
                         std::abs(line3.h_lazy_corrected - 6.0) <= 1e-8;
  r.passed = worst_simple <= 1e-8 && worst_lazy <= 1e-8 && variant_differs;
  r.detail = "worst simple/lazy deviation = " + sig(worst_simple) + "/" + sig(worst_lazy) +
             "; printed variant on line3 = " + sig(line3.h_lazy_paper) + " vs corrected " +
             sig(line3.h_lazy_corrected) + " (flagged)";
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 6. half-potential minus meeting is harmonic for the product walk
CriterionResult criterion_harmonicity() {
  auto t0 = Clock::now();
  CriterionResult r{6, "half potential minus virtual meeting is product-walk harmonic", false, "", 0};
  double worst = 0;
  std::string worst_graph = "-";
  for (const auto& e : assumption_corpus()) {
    Eigen::MatrixXd f =
        0.5 * potential_table(e.graph) - exact_meeting_times(e.graph, ProcessKind::virtual_).times;
    double res = harmonic_residual(f, e.graph);
    if (res > worst) {
      worst = res;
      worst_graph = e.label;
    }
  }
  r.passed = worst <= 1e-9;
  r.detail = "worst residual = " + sig(worst) + " on " + worst_graph + " (tol 1e-9)";
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 7. random-target identity on every corpus lazy chain
CriterionResult criterion_random_target() {
  auto t0 = Clock::now();
  CriterionResult r{7, "random-target identity on all corpus lazy chains", false, "", 0};
  double worst = 0;
  std::string worst_graph = "-";
  for (const auto& e : standard_corpus()) {
    double res = random_target_residual(lazy_transition_matrix(e.graph));
    if (res > worst) {
      worst = res;
      worst_graph = e.label;
    }
  }
  Graph c4 = make_cycle(4);
  double hit_side = hitting_table(lazy_transition_matrix(c4)).row(0).sum() / 4.0;
  Spectrum s = symmetric_spectrum(lazy_transition_matrix(c4).mat);
  double eig_side = 0;
  for (int k = 1; k < 4; ++k) eig_side += 1.0 / (1.0 - s.values(k));
  bool c4_pinned = std::abs(hit_side - 5.0) <= 1e-8 && std::abs(eig_side - 5.0) <= 1e-8;
  r.passed = worst <= 1e-8 && c4_pinned;
  r.detail = "worst residual = " + sig(worst) + " on " + worst_graph + "; C4 sides " +
             sig(hit_side) + " / " + sig(eig_side) + " (both pinned to 5)";
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 8. Laplacian spectrum of the square = pairwise sums
CriterionResult criterion_product_spectrum() {
  auto t0 = Clock::now();
  CriterionResult r{8, "square-graph Laplacian spectrum is the pairwise-sum multiset", false, "", 0};
  double worst = 0;
  std::string worst_graph = "-";
  int tested = 0;
  for (const auto& e : standard_corpus()) {
    if (e.graph.n > 10) continue;
    ++tested;
    double res = product_spectrum_check(e.graph);
    if (res > worst) {
      worst = res;
      worst_graph = e.label;
    }
  }
  r.passed = worst <= 1e-8 && tested > 0;
  r.detail = "worst residual = " + sig(worst) + " on " + worst_graph + " over " +
             std::to_string(tested) + " graphs (n <= 10)";
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 9. spectral-gap bound and the two product-chain eigenvalue identities
CriterionResult criterion_eigen_identities() {
  auto t0 = Clock::now();
  CriterionResult r{9, "alpha2 gap bound; product-chain eigenvalue identities", false, "", 0};
  std::string bad;
  double worst_gap_margin = 1e300, worst_eq = 0;
  for (const auto& e : standard_corpus()) {
    double alpha2 = symmetric_spectrum(lazy_transition_matrix(e.graph).mat).values(1);
    double bound = 1.0 - 1.0 / (2.0 * e.graph.n * e.graph.m() * diameter(e.graph));
    worst_gap_margin = std::min(worst_gap_margin, bound - alpha2);
    if (alpha2 > bound + 1e-8) bad += " gap(" + e.label + ")";
  }
  for (const auto& e : assumption_corpus()) {
    ContractionReport rep = contraction_factor(e.graph);
    double eq = std::max(std::abs(rep.alpha2_kbar - rep.alpha2_lazy),
                         std::abs(rep.alpha_min_kbar - rep.alpha_min_from_laplacian));
    worst_eq = std::max(worst_eq, eq);
    if (eq > 1e-8) bad += " identity(" + e.label + ")";
  }
  r.passed = bad.empty();
  r.detail = "min gap margin = " + sig(worst_gap_margin) +
             "; worst identity deviation = " + sig(worst_eq);
  if (!bad.empty()) r.detail += "; failing:" + bad;
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 10. max-Laplacian-eigenvalue diagnostics
CriterionResult criterion_laplacian_diagnostic() {
  auto t0 = Clock::now();
  CriterionResult r{10, "degree-sum eigenvalue bound everywhere; m-1/2 refinement flags", false, "",
                    0};
  std::string bad;
  for (const auto& e : standard_corpus()) {
    MaxEigReport rep = laplacian_max_eig_report(e.graph);
    if (rep.alpha1 > rep.degree_sum_bound + 1e-8) bad += " degree_sum(" + e.label + ")";
    bool expect_violation = e.label == "C4";
    if (e.label == "C4" || e.label == "C6" || e.label == "C8" || e.label == "K5" ||
        e.label == "petersen") {
      if (rep.violated != expect_violation) bad += " flag(" + e.label + ")";
    }
  }
  MaxEigReport c4 = laplacian_max_eig_report(make_cycle(4));
  if (std::abs(c4.alpha1 - 4.0) > 1e-8 || std::abs(c4.half_refinement - 3.5) > 1e-8)
    bad += " c4_values";
  r.passed = bad.empty();
  r.detail = "C4: alpha1 = " + sig(c4.alpha1) + " > m-1/2 = " + sig(c4.half_refinement) +
             " flagged; refinement clean on C6,C8,K5,petersen";
  if (!bad.empty()) r.detail += "; failing:" + bad;
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 11. Monte Carlo agrees with the exact tables (3 sigma, 20k trials)
CriterionResult criterion_monte_carlo(std::uint64_t seed) {
  auto t0 = Clock::now();
  CriterionResult r{11, "per-pair Monte Carlo means within 3 standard errors of exact", false, "",
                    0};
  double worst_z = 0;
  std::string worst_at = "-", bad;
  const long long trials = 20000;
  const std::vector<std::string> labels = {"C4", "C6", "petersen"};
  for (std::size_t li = 0; li < labels.size(); ++li) {
    const std::string& label = labels[li];
    const Graph* g = nullptr;
    for (const auto& e : standard_corpus())
      if (e.label == label) g = &e.graph;
    QCW_CHECK(g != nullptr, "corpus label missing");
    Eigen::MatrixXd exact = exact_meeting_times(*g, ProcessKind::original).times;
    auto est = estimate_max_meeting(ProcessKind::original, *g, trials,
                                    Rng::derived(seed, li + 1).next_u64());
    for (const auto& p : est.pairs) {
      double se = std::max(p.stderr_, 1e-12);
      double z = std::abs(p.mean - exact(p.start_a, p.start_b)) / se;
      if (z > worst_z) {
        worst_z = z;
        worst_at = label + "(" + std::to_string(p.start_a) + "," + std::to_string(p.start_b) + ")";
      }
      if (z > 3.0) bad += " " + label;
    }
  }
  r.seconds = seconds_since(t0);
  r.passed = bad.empty() && r.seconds < 60.0;
  r.detail = "worst z = " + sig(worst_z) + " at " + worst_at + " (20k trials/pair)";
  if (!bad.empty()) r.detail += "; failing:" + bad;
  return r;
}

// ---- 12. protocol invariants over randomized runs
CriterionResult criterion_dynamics_properties(std::uint64_t seed) {
  auto t0 = Clock::now();
  CriterionResult r{12, "randomized runs: conservation, monotone drop, budget, convergence", false,
                    "", 0};
  const int runs = 1000;
  std::string bad;
  long long max_steps_seen = 0;
  for (int run = 0; run < runs && bad.empty(); ++run) {
    Rng rng = Rng::derived(seed ^ 0x5f3759df9e3779b9ULL, static_cast<std::uint64_t>(run));
    int n = 4 + rng.below_int(7);  // 4..10
    Graph g = make_random_connected(n, 0.55, rng.next_u64());
    std::vector<long long> vals(static_cast<std::size_t>(n));
    for (auto& v : vals) v = rng.below_int(6);
    OpinionProfile x = make_profile(vals);
    const long long total0 = x.total;
    const long long budget = nontrivial_budget(x);
    long long scaled = lyapunov_scaled(x);
    long long nontrivial = 0, steps = 0;
    const long long cap = 10'000'000;
    while (!in_consensus(x) && steps < cap) {
      ++steps;
      auto [i, j] = g.edges[rng.below(g.edges.size())];
      bool nt = is_nontrivial(x, i, j);
      x = quantized_update(x, i, j);
      long long next_scaled = lyapunov_scaled(x);
      if (next_scaled > scaled) bad = " lyapunov_increase(run " + std::to_string(run) + ")";
      if (nt) {
        ++nontrivial;
        if (scaled - next_scaled < 2LL * n) bad = " drop_below_2(run " + std::to_string(run) + ")";
      } else if (next_scaled != scaled) {
        bad = " trivial_update_changed_lyapunov(run " + std::to_string(run) + ")";
      }
      scaled = next_scaled;
    }
    if (x.total != total0) bad += " sum(run " + std::to_string(run) + ")";
    if (nontrivial > budget) bad += " budget(run " + std::to_string(run) + ")";
    if (steps >= cap) bad += " no_convergence(run " + std::to_string(run) + ")";
    max_steps_seen = std::max(max_steps_seen, steps);
    // the packaged runner must agree on the trace-level invariants
    RunTrace tr = run_consensus(g, make_profile(vals), rng.next_u64());
    if (!tr.terminated || tr.nontrivial_updates > budget)
      bad += " trace(run " + std::to_string(run) + ")";
  }
  r.passed = bad.empty();
  r.detail = bad.empty() ? std::to_string(runs) + " runs clean; longest run " +
                               std::to_string(max_steps_seen) + " steps"
                         : "failed:" + bad;
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 13. ratio sweep and the cubic line-graph growth
CriterionResult criterion_sweep(std::uint64_t seed) {
  auto t0 = Clock::now();
  CriterionResult r{13, "ratio sweep bounded by 1; line-graph log-log slope in [2.8, 3.2]", false,
                    "", 0};
  auto rows = sweep_ratio({"line", "star", "lollipop", "semi_regular"}, 3, 24, true, 2000, seed);
  double worst_ratio = 0;
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    worst_ratio = std::max(worst_ratio, row.ratio);
    if (row.family == "line" && row.n >= 8) {
      xs.push_back(row.n);
      ys.push_back(row.tbar);
    }
  }
  double slope = log_log_slope(xs, ys);
  r.passed = worst_ratio <= 1.0 && slope >= 2.8 && slope <= 3.2;
  r.detail = "max ratio = " + sig(worst_ratio) + " over " + std::to_string(rows.size()) +
             " rows; line slope (n=8..24) = " + sig(slope);
  r.seconds = seconds_since(t0);
  return r;
}

// ---- 14. time-varying schedules: bound, static reduction, mixing decay
CriterionResult criterion_time_varying(std::uint64_t seed) {
  auto t0 = Clock::now();
  CriterionResult r{14, "schedule meeting times under the explicit bound; static reduction; mixing",
                    false, "", 0};
  std::string bad;
  struct Spec {
    std::string name;
    std::vector<std::string> members;
    GraphSequence::Mode mode;
    bool constant;
  };
  std::vector<Spec> specs = {
      {"const_c6", {"cycle:6"}, GraphSequence::Mode::periodic, true},
      {"alt_c6_line6", {"cycle:6", "line:6"}, GraphSequence::Mode::periodic, false},
      {"alt_c8_k8", {"cycle:8", "complete:8"}, GraphSequence::Mode::periodic, false},
      {"pool_n10", {"cycle:10", "semi_regular:n=10,k=2", "petersen"}, GraphSequence::Mode::random_pool,
       false},
      {"alt_line8_c8", {"line:8", "cycle:8"}, GraphSequence::Mode::periodic, false},
      {"const_petersen", {"petersen"}, GraphSequence::Mode::periodic, true},
  };
  const long long trials = 500;
  double worst_margin = 1e300;
  for (std::size_t si = 0; si < specs.size(); ++si) {
    const auto& spec = specs[si];
    std::vector<Graph> members;
    for (const auto& s : spec.members) members.push_back(parse_graph_spec(s));
    GraphSequence seq = sequence_schedule(std::move(members), spec.mode, seed + si);

    MeetingTable table = exact_meeting_times(seq.members.front(), ProcessKind::original);
    WalkerPair start{table.argmax_x, table.argmax_y};
    TvMeetingReport rep = meeting_time_tv(seq, start, trials, seed + 1000 + si);
    worst_margin = std::min(worst_margin, rep.bound - rep.mean);
    if (!rep.within_bound) bad += " bound(" + spec.name + ")";
    if (spec.constant) {
      double z = std::abs(rep.mean - table.max_time) / std::max(rep.stderr_, 1e-12);
      if (z > 3.0) bad += " static_reduction(" + spec.name + ", z=" + sig(z) + ")";
    }
    MixingTrace trace = mixing_trace(seq, pair_point_mass(seq.n, start.pos0, start.pos2), 150);
    bool decreasing = true;
    for (std::size_t t = 1; t < trace.norms.size(); ++t)
      decreasing = decreasing && trace.norms[t] <= trace.norms[t - 1] + 1e-12;
    if (!decreasing || !(trace.norms.back() < 0.5 * trace.norms.front()))
      bad += " mixing(" + spec.name + ")";
    if (!trace.flagged_steps.empty()) bad += " claimed_contraction(" + spec.name + ")";
  }
  r.seconds = seconds_since(t0);
  r.passed = bad.empty() && r.seconds < 300.0;
  r.detail = "6 schedules on n in {6,8,10}; min bound margin = " + sig(worst_margin);
  if (!bad.empty()) r.detail += "; failing:" + bad;
  return r;
}

// ---- 15. closed-form reporting with the known cycle discrepancy flagged
CriterionResult criterion_corollary_reporting() {
  auto t0 = Clock::now();
  CriterionResult r{15, "line closed forms bracket the oracle; cycle formula flagged, non-fatal",
                    false, "", 0};
  std::string bad;
  for (int n = 3; n <= 8; ++n) {
    BoundReport rep = corollary_formulas(LineFamily::line, n);
    for (const auto& c : rep.checks)
      if (c.violated) bad += " line(n=" + std::to_string(n) + "," + c.name + ")";
  }
  double c4_formula = 0, c4_oracle = 0;
  bool c4_flagged = false, all_diag = true;
  for (int n = 4; n <= 8; ++n) {
    BoundReport rep = corollary_formulas(LineFamily::cycle, n);
    all_diag = all_diag && !rep.any_hard_violation();
    const auto& c = rep.checks.front();
    if (n == 4) {
      c4_formula = c.reference;
      c4_oracle = c.value;
      c4_flagged = c.violated;
    }
  }
  bool c4_values = std::abs(c4_formula - 5.25) <= 1e-9 && std::abs(c4_oracle - 7.0) <= 1e-8;
  r.passed = bad.empty() && c4_flagged && c4_values && all_diag;
  r.detail = "cycle n=4: formula " + sig(c4_formula) + " < oracle " + sig(c4_oracle) +
             " flagged diagnostic (non-fatal)";
  if (!bad.empty()) r.detail += "; failing:" + bad;
  if (!c4_flagged) r.detail += "; expected cycle flag missing";
  r.seconds = seconds_since(t0);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t seed, std::ostream* progress) {
  std::vector<CriterionResult> results;
  auto add = [&](CriterionResult r) {
    if (progress)
      (*progress) << "[" << (r.passed ? "PASS" : "FAIL") << "] criterion " << r.id << " ("
                  << sig(r.seconds) << "s)\n";
    results.push_back(std::move(r));
  };
  add(criterion_half_hitting());
  add(criterion_factor_two());
  add(criterion_sandwich());
  add(criterion_star_family());
  add(criterion_resistance_identities());
  add(criterion_harmonicity());
  add(criterion_random_target());
  add(criterion_product_spectrum());
  add(criterion_eigen_identities());
  add(criterion_laplacian_diagnostic());
  add(criterion_monte_carlo(seed));
  add(criterion_dynamics_properties(seed));
  add(criterion_sweep(seed));
  add(criterion_time_varying(seed));
  add(criterion_corollary_reporting());
  return results;
}

bool print_acceptance_report(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << "criterion " << (r.id < 10 ? " " : "") << r.id << ": "
        << (r.passed ? "PASS" : "FAIL") << "  " << r.title << "\n    " << r.detail << "  ["
        << format_sig(r.seconds) << " s]\n";
    all = all && r.passed;
  }
  int passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  out << passed << "/" << results.size() << " criteria passed\n";
  return all;
}

}  // namespace qcwalk
