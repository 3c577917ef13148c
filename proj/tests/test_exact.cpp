#include <algorithm>

#include "doctest.h"
#include "qcwalk/exact.hpp"
#include "qcwalk/graph.hpp"

using namespace qcwalk;

TEST_CASE("three-node line hitting tables") {
  Graph g = make_line(3);
  ChainMatrix lazy = lazy_transition_matrix(g);
  Eigen::VectorXd h = hitting_times(lazy, 2);
  CHECK(h(0) == doctest::Approx(6.0));
  CHECK(h(1) == doctest::Approx(4.0));

  Eigen::MatrixXd hs = hitting_table(simple_transition_matrix(g));
  CHECK(hs(0, 1) == doctest::Approx(1.0));
  CHECK(hs(0, 2) == doctest::Approx(4.0));  // (n-1)^2 on a line end
  CHECK(hs(1, 0) == doctest::Approx(3.0));
  CHECK(hs(1, 2) == doctest::Approx(3.0));
  CHECK(hs(2, 1) == doctest::Approx(1.0));
  CHECK(hs(2, 0) == doctest::Approx(4.0));
  CHECK(hs(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("lazy transition matrix structure") {
  Graph g = make_cycle(4);
  ChainMatrix lazy = lazy_transition_matrix(g);
  CHECK(lazy.mat(0, 0) == doctest::Approx(0.5));           // 1 - d/m
  CHECK(lazy.mat(0, 1) == doctest::Approx(0.25));          // 1/m
  CHECK(lazy.mat(0, 2) == doctest::Approx(0.0));
  CHECK(lazy.mat.isApprox(lazy.mat.transpose(), 1e-12));   // doubly stochastic
}

TEST_CASE("effective resistance") {
  CHECK(effective_resistance(make_line(3), 0, 2) == doctest::Approx(2.0));
  CHECK(effective_resistance(make_cycle(4), 0, 1) == doctest::Approx(0.75));
  CHECK(effective_resistance(make_complete(4), 0, 1) == doctest::Approx(0.5));
  Graph p4 = make_line(4);
  Eigen::MatrixXd r = resistance_matrix(p4);
  CHECK(r(0, 3) == doctest::Approx(3.0));
  CHECK(r.isApprox(r.transpose(), 1e-12));
  CHECK(r.diagonal().cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("voltages computed two ways agree") {
  Graph g = make_line(3);
  VoltageProfile v = visit_voltage_profile(g, 0, 2);
  REQUIRE(v.by_visits.size() == 3);
  CHECK(v.by_visits(0) == doctest::Approx(2.0));
  CHECK(v.by_visits(1) == doctest::Approx(1.0));
  CHECK(v.by_visits(2) == doctest::Approx(0.0));
  CHECK(v.discrepancy <= 1e-10);

  VoltageProfile w = visit_voltage_profile(make_petersen(), 0, 7);
  CHECK(w.discrepancy <= 1e-10);
}

TEST_CASE("hitting times from resistances") {
  ResistanceHitting rh = hitting_from_resistance(make_line(3), 0, 2);
  CHECK(rh.h_simple == doctest::Approx(4.0));
  CHECK(rh.h_lazy_corrected == doctest::Approx(6.0));
  CHECK(rh.h_lazy_paper == doctest::Approx(10.0));  // reported variant, differs on purpose

  // corrected lazy form must match the absorbing solve everywhere on K4
  Graph k4 = make_complete(4);
  Eigen::MatrixXd hl = hitting_table(lazy_transition_matrix(k4));
  for (int a = 0; a < 4; ++a)
    for (int z = 0; z < 4; ++z) {
      if (a == z) continue;
      CHECK(hitting_from_resistance(k4, a, z).h_lazy_corrected == doctest::Approx(hl(a, z)));
    }
}

TEST_CASE("hidden vertices") {
  Graph g = make_line(3);
  auto hidden = hidden_vertices(simple_transition_matrix(g));
  CHECK(hidden == std::vector<int>{0, 2});
  CHECK(hidden_vertex(simple_transition_matrix(g)) == 0);

  auto lazy_hidden = hidden_vertices(lazy_transition_matrix(make_lollipop(12)));
  CHECK(std::find(lazy_hidden.begin(), lazy_hidden.end(), 0) != lazy_hidden.end());
  CHECK(std::find(lazy_hidden.begin(), lazy_hidden.end(), 11) != lazy_hidden.end());
}

TEST_CASE("pair potential") {
  CHECK(potential_phi(make_cycle(4), 0, 2) == doctest::Approx(8.0));
  Graph c5 = make_cycle(5);
  Eigen::MatrixXd phi = potential_table(c5);
  CHECK(phi.isApprox(phi.transpose(), 1e-9));
  CHECK(phi.diagonal().cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("exact meeting tables on the 4-cycle") {
  MeetingTable orig = exact_meeting_times(make_cycle(4), ProcessKind::original);
  CHECK(orig.max_time == doctest::Approx(7.0));
  CHECK(orig.times(0, 1) == doctest::Approx(6.0));
  CHECK(orig.times(0, 2) == doctest::Approx(7.0));
  CHECK((orig.argmax_x + 2) % 4 == orig.argmax_y);

  MeetingTable virt = exact_meeting_times(make_cycle(4), ProcessKind::virtual_);
  CHECK(virt.max_time == doctest::Approx(4.0));
  CHECK(virt.times(0, 1) == doctest::Approx(3.0));
  CHECK(virt.times(0, 2) == doctest::Approx(4.0));
}

TEST_CASE("lazy hitting can be asymmetric") {
  // pinned regression: ends of a 5-line reach the middle much faster than back
  Eigen::MatrixXd h = hitting_table(lazy_transition_matrix(make_line(5)));
  CHECK(h(0, 1) == doctest::Approx(4.0));
  CHECK(h(1, 0) == doctest::Approx(16.0));
  CHECK(lazy_hitting_max(make_line(5)) == doctest::Approx(40.0));

  // vertex-transitive graphs keep the symmetry
  Eigen::MatrixXd hc = hitting_table(lazy_transition_matrix(make_cycle(5)));
  CHECK((hc - hc.transpose()).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("pair transition masses") {
  Graph c5 = make_cycle(5);
  PairTransition tr = pair_transitions(c5, {0, 1}, ProcessKind::virtual_);
  CHECK(tr.meet == doctest::Approx(0.4));
  CHECK(tr.hold == doctest::Approx(0.2));
  double mass = tr.meet + tr.hold;
  for (const auto& [next, p] : tr.moves) {
    CHECK(next.pos0 != next.pos2);
    mass += p;
  }
  CHECK(mass == doctest::Approx(1.0));

  PairTransition to = pair_transitions(c5, {0, 2}, ProcessKind::original);
  CHECK(to.meet == doctest::Approx(0.0));
  CHECK(to.hold == doctest::Approx(0.2));  // only (3,4) moves neither walker
}

TEST_CASE("harmonic defect of the half-potential ansatz") {
  for (const Graph& g : {make_cycle(6), make_complete(4), make_petersen()}) {
    Eigen::MatrixXd f =
        0.5 * potential_table(g) - exact_meeting_times(g, ProcessKind::virtual_).times;
    CHECK(harmonic_residual(f, g) <= 1e-9);
  }
}

TEST_CASE("oracle guardrails") {
  CHECK_THROWS_AS(exact_meeting_times(make_cycle(70), ProcessKind::original), check_error);
  CHECK_THROWS_AS(hitting_times(lazy_transition_matrix(make_cycle(4)), 9), check_error);
}
