#include <numeric>

#include "doctest.h"
#include "qcwalk/graph.hpp"
#include "qcwalk/walkers.hpp"

using namespace qcwalk;

TEST_CASE("one original step") {
  Graph g = make_cycle(4);  // edges (0,1) (0,3) (1,2) (2,3) in normalized order
  int e01 = -1, e12 = -1, e23 = -1;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == 0 && v == 1) e01 = e;
    if (u == 1 && v == 2) e12 = e;
    if (u == 2 && v == 3) e23 = e;
  }
  REQUIRE(e01 >= 0);
  REQUIRE(e12 >= 0);
  REQUIRE(e23 >= 0);

  WalkerPair w{0, 1};
  CHECK(original_step(g, w, e01).met);
  StepResult moved = original_step(g, w, e12);
  CHECK_FALSE(moved.met);
  CHECK(moved.next.pos0 == 0);
  CHECK(moved.next.pos2 == 2);
  StepResult idle = original_step(g, w, e23);
  CHECK_FALSE(idle.met);
  CHECK(idle.next.pos0 == w.pos0);
  CHECK(idle.next.pos2 == w.pos2);
}

TEST_CASE("virtual law on a 4-cycle, adjacent pair") {
  Graph g = make_cycle(4);
  auto dist = virtual_edge_distribution(g, {0, 1});
  REQUIRE(static_cast<int>(dist.size()) == g.m());
  double connecting = 0, far = 0;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if ((u == 0 && v == 1)) connecting = dist[e];
    if ((u == 2 && v == 3)) far = dist[e];
  }
  CHECK(connecting == doctest::Approx(0.5));
  CHECK(far == doctest::Approx(0.0));
  CHECK(std::accumulate(dist.begin(), dist.end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("virtual law on a 5-cycle, adjacent pair") {
  Graph g = make_cycle(5);
  auto dist = virtual_edge_distribution(g, {0, 1});
  double sum = 0;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    double p = dist[e];
    sum += p;
    if (u == 0 && v == 1)
      CHECK(p == doctest::Approx(0.4));  // 2/m
    else if (v == 0 || u == 1 || v == 1 || u == 0)
      CHECK(p == doctest::Approx(0.2));  // single-incident: 1/m
    else
      CHECK(p == doctest::Approx(0.1));  // far: (m - dsum)/(m (m+1-dsum))
  }
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("virtual law for non-adjacent pairs is uniform") {
  Graph g = make_cycle(6);
  auto dist = virtual_edge_distribution(g, {0, 3});
  for (double p : dist) CHECK(p == doctest::Approx(1.0 / 6));
}

TEST_CASE("virtual law refuses star-shaped graphs") {
  CHECK_THROWS_AS(virtual_edge_distribution(make_star(5), {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(virtual_edge_distribution(make_double_star(3, 2, 8), {2, 3}),
                  std::invalid_argument);
}

TEST_CASE("two nodes meet in exactly one step") {
  Graph g = make_complete(2);
  Rng rng(42);
  MeetingSample s = simulate_meeting(ProcessKind::original, g, {0, 1}, rng);
  CHECK(s.steps == 1);
  CHECK_FALSE(s.censored);
}

TEST_CASE("estimates line up with the 4-cycle means") {
  Graph g = make_cycle(4);
  auto est = estimate_max_meeting(ProcessKind::original, g, 5000, 99);
  CHECK(est.pairs.size() == 12);
  // worst expected meeting time is 7 on the antipodal pairs
  CHECK(est.max_mean == doctest::Approx(7.0).epsilon(0.06));
  bool antipodal = (est.argmax_a + 2) % 4 == est.argmax_b;
  CHECK(antipodal);
  auto est_v = estimate_max_meeting(ProcessKind::virtual_, g, 5000, 17);
  CHECK(est_v.max_mean == doctest::Approx(4.0).epsilon(0.08));

  auto rerun = estimate_max_meeting(ProcessKind::original, g, 5000, 99);
  CHECK(rerun.max_mean == est.max_mean);  // same seed, same draws
}

TEST_CASE("censoring at a step cap") {
  Graph g = make_cycle(6);
  std::vector<std::pair<int, int>> starts = {{0, 3}};
  auto est = estimate_max_meeting(ProcessKind::original, g, 50, 5, &starts, 1);
  REQUIRE(est.pairs.size() == 1);
  CHECK(est.pairs[0].censored > 0);
  CHECK(est.pairs[0].mean == doctest::Approx(1.0));
}

TEST_CASE("start subset is required beyond the all-pairs cap") {
  Graph g = make_cycle(14);
  CHECK_THROWS_AS(estimate_max_meeting(ProcessKind::original, g, 10, 1), std::invalid_argument);
  std::vector<std::pair<int, int>> starts = {{0, 7}};
  auto est = estimate_max_meeting(ProcessKind::original, g, 10, 1, &starts);
  CHECK(est.pairs.size() == 1);
}
