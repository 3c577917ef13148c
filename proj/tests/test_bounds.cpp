#include <cmath>

#include "doctest.h"
#include "qcwalk/bounds.hpp"
#include "qcwalk/exact.hpp"
#include "qcwalk/graph.hpp"

using namespace qcwalk;

TEST_CASE("distance-class chain on a 5-cycle") {
  Graph g = make_cycle(5);
  BDChain mass = birth_death_chain(g, DownReading::class_mass);
  REQUIRE(mass.num_classes == 3);
  CHECK(mass.class_size[0] == 5);
  CHECK(mass.class_size[1] == 10);
  CHECK(mass.class_size[2] == 10);
  CHECK(mass.p_stay[0] == doctest::Approx(1.0));  // absorbing floor
  CHECK(mass.p_stay[2] == doctest::Approx(0.6));
  CHECK(mass.p_down[2] == doctest::Approx(0.4));  // top class: remainder folds into stay
  CHECK(mass.p_up[2] == doctest::Approx(0.0));

  BDChain single = birth_death_chain(g, DownReading::single_target);
  CHECK(single.p_down[2] == doctest::Approx(0.2));
  CHECK(single.p_stay[2] == doctest::Approx(0.8));

  for (int l = 1; l < mass.num_classes; ++l) {
    CHECK(mass.p_down[l] >= 1.0 / g.m() - 1e-12);
    CHECK(single.p_down[l] >= 1.0 / g.m() - 1e-12);
  }
}

TEST_CASE("chain bounds dominate the exact worst meeting time") {
  for (const Graph& g :
       {make_cycle(4), make_cycle(5), make_cycle(6), make_line(3), make_line(5), make_complete(4),
        make_petersen()}) {
    double tbar = exact_meeting_times(g, ProcessKind::original).max_time;
    for (auto reading : {DownReading::class_mass, DownReading::single_target}) {
      BDChain chain = birth_death_chain(g, reading);
      double bound = bd_hitting_bound(chain, chain.num_classes - 1);
      CHECK(bound >= tbar - 1e-8);
    }
  }
}

TEST_CASE("pinned chain-bound values") {
  CHECK(bd_hitting_bound(birth_death_chain(make_cycle(5), DownReading::class_mass), 2) ==
        doctest::Approx(12.5));
  CHECK(bd_hitting_bound(birth_death_chain(make_cycle(5), DownReading::single_target), 2) ==
        doctest::Approx(20.0));
  CHECK(bd_hitting_bound(birth_death_chain(make_cycle(6), DownReading::class_mass), 3) ==
        doctest::Approx(21.0));
  CHECK(bd_hitting_bound(birth_death_chain(make_line(5), DownReading::class_mass), 4) ==
        doctest::Approx(24.0));
  BDChain pet_single = birth_death_chain(make_petersen(), DownReading::single_target);
  CHECK(bd_hitting_bound(pet_single, 2) == doctest::Approx(90.0));
  BDChain pet_mass = birth_death_chain(make_petersen(), DownReading::class_mass);
  CHECK(bd_hitting_bound(pet_mass, 2) == doctest::Approx(52.5));
}

TEST_CASE("star closed form") {
  CHECK(star_closed_form(2) == doctest::Approx(4.0));
  CHECK(star_closed_form(4) == doctest::Approx(12.0));
  CHECK(star_closed_form(7) == doctest::Approx(31.5));
  CHECK_THROWS_AS(star_closed_form(1), std::invalid_argument);
  // closed form vs the dense oracle
  for (int n = 3; n <= 7; ++n) {
    double tbar = exact_meeting_times(make_star(n), ProcessKind::original).max_time;
    CHECK(tbar == doctest::Approx(star_closed_form(n - 1)));
  }
}

TEST_CASE("sandwich report on a symmetric graph") {
  BoundReport rep = theorem3_bounds(make_cycle(4));
  CHECK_FALSE(rep.any_hard_violation());
  bool saw_upper = false;
  for (const auto& c : rep.checks)
    if (c.name == "lazy_le_2nmD") {
      saw_upper = true;
      CHECK(c.value == doctest::Approx(8.0));   // worst lazy hitting
      CHECK(c.reference == doctest::Approx(64.0));
    }
  CHECK(saw_upper);
}

TEST_CASE("sandwich report exposes the lower-side failure on long lines") {
  BoundReport rep = theorem3_bounds(make_line(5));
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "half_lazy_le_meeting") {
      found = true;
      CHECK(c.violated);  // 20 > 19.6: pinned counterexample
      CHECK(c.value == doctest::Approx(20.0));
      CHECK(c.reference == doctest::Approx(19.6));
    }
  CHECK(found);
}

TEST_CASE("closed-form reports for lines and cycles") {
  BoundReport line3 = corollary_formulas(LineFamily::line, 3);
  for (const auto& c : line3.checks) {
    CHECK_FALSE(c.violated);
    if (c.name == "line_upper_ge_meeting") {
      CHECK(c.reference == doctest::Approx(4.0));  // (n-1)^2 (n+1)/4
      CHECK(c.value == doctest::Approx(4.0));
    }
  }
  BoundReport cyc4 = corollary_formulas(LineFamily::cycle, 4);
  REQUIRE(!cyc4.checks.empty());
  const auto& c = cyc4.checks.front();
  CHECK(c.violated);
  CHECK(c.diagnostic);
  CHECK(c.reference == doctest::Approx(5.25));
  CHECK(c.value == doctest::Approx(7.0));
  CHECK_FALSE(cyc4.any_hard_violation());
}

TEST_CASE("switching-topology meeting bound") {
  CHECK(time_varying_bound(4, 4, 2) ==
        doctest::Approx(32.0 * 16 * 4 * 2 * (1.0 + std::log(4.0))).epsilon(1e-12));
  CHECK(time_varying_bound(4, 4, 2) == doctest::Approx(9774.26).epsilon(1e-4));
  CHECK(time_varying_bound(2, 1, 1) > 0);
}
