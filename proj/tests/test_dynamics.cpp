#include "doctest.h"
#include "qcwalk/dynamics.hpp"
#include "qcwalk/graph.hpp"
#include "qcwalk/schedule.hpp"

using namespace qcwalk;

namespace {
OpinionProfile prof(std::vector<long long> v) { return make_profile(std::move(v)); }
}  // namespace

TEST_CASE("pairwise update rules") {
  // gap >= 2: one unit moves toward the mean
  CHECK(quantized_update(prof({3, 1}), 0, 1).values == std::vector<long long>{2, 2});
  CHECK(quantized_update(prof({1, 3}), 0, 1).values == std::vector<long long>{2, 2});
  CHECK(quantized_update(prof({5, 1}), 0, 1).values == std::vector<long long>{4, 2});
  // gap 1: swap
  CHECK(quantized_update(prof({2, 1}), 0, 1).values == std::vector<long long>{1, 2});
  // equal: nothing
  CHECK(quantized_update(prof({2, 2}), 0, 1).values == std::vector<long long>{2, 2});
  CHECK_THROWS_AS(quantized_update(prof({1, 2}), 1, 1), std::invalid_argument);
  CHECK(is_nontrivial(prof({3, 1}), 0, 1));
  CHECK_FALSE(is_nontrivial(prof({2, 1}), 0, 1));
  CHECK_FALSE(is_nontrivial(prof({2, 2}), 0, 1));
}

TEST_CASE("profiles") {
  OpinionProfile x = parse_profile("x-set:0,4", 6);
  CHECK(x.values == std::vector<long long>{0, 1, 1, 1, 2, 1});
  CHECK(x.total == 6);
  OpinionProfile y = parse_profile("list:3,1,4", 3);
  CHECK(y.values == std::vector<long long>{3, 1, 4});
  CHECK_THROWS_AS(parse_profile("x-set:0", 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("x-set:0,9", 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("list:1,2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("", 3), std::invalid_argument);
}

TEST_CASE("energy accounting") {
  CHECK(lyapunov_scaled(prof({2, 2, 2})) == 0);
  CHECK(lyapunov_scaled(prof({3, 1})) == 4);
  CHECK(lyapunov(prof({3, 1})) == doctest::Approx(2.0));
  // spread-2 profile on 8 nodes: ceil(4*8/8) = 4 nontrivial updates at most
  CHECK(nontrivial_budget(parse_profile("x-set:0,7", 8)) == 4);
  CHECK(nontrivial_budget(parse_profile("x-set:0,5", 6)) == 3);
  CHECK(nontrivial_budget(prof({5, 0, 0, 0})) == 13);  // ceil(25*4/8)

  // a nontrivial update drops the scaled energy by exactly 2n here
  OpinionProfile before = prof({3, 1});
  OpinionProfile after = quantized_update(before, 0, 1);
  CHECK(lyapunov_scaled(before) - lyapunov_scaled(after) == 4);
  // a swap leaves it unchanged
  OpinionProfile s0 = prof({2, 1, 1});
  OpinionProfile s1 = quantized_update(s0, 0, 1);
  CHECK(lyapunov_scaled(s0) == lyapunov_scaled(s1));
}

TEST_CASE("consensus predicate") {
  CHECK(in_consensus(prof({1, 1, 2})));
  CHECK(in_consensus(prof({3, 3, 3})));
  CHECK_FALSE(in_consensus(prof({0, 1, 2})));
}

TEST_CASE("full run on a cycle") {
  Graph g = make_cycle(6);
  OpinionProfile x0 = parse_profile("x-set:0,3", 6);
  RunTrace tr = run_consensus(g, x0, 12345, kDefaultMaxSteps, true);
  CHECK(tr.terminated);
  CHECK(tr.steps_to_consensus >= 1);
  CHECK(tr.nontrivial_updates <= nontrivial_budget(x0));
  REQUIRE(tr.lyapunov_series.size() >= 2);
  for (std::size_t i = 1; i < tr.lyapunov_series.size(); ++i)
    CHECK(tr.lyapunov_series[i] <= tr.lyapunov_series[i - 1] + 1e-12);

  // same seed, same trajectory; different seed (almost surely) different
  RunTrace again = run_consensus(g, x0, 12345);
  CHECK(again.steps_to_consensus == tr.steps_to_consensus);
  CHECK(again.nontrivial_updates == tr.nontrivial_updates);
}

TEST_CASE("degenerate starts") {
  Graph g = make_line(4);
  RunTrace tr = run_consensus(g, prof({2, 2, 2, 2}), 1);
  CHECK(tr.terminated);
  CHECK(tr.steps_to_consensus == 0);
  RunTrace tr2 = run_consensus(g, prof({1, 2, 1, 2}), 1);
  CHECK(tr2.steps_to_consensus == 0);
}

TEST_CASE("step cap reports non-termination") {
  Graph g = make_cycle(8);
  RunTrace tr = run_consensus(g, parse_profile("x-set:0,4", 8), 9, 1);
  CHECK_FALSE(tr.terminated);
  CHECK(tr.steps_to_consensus == 1);
}

TEST_CASE("run over a switching schedule") {
  GraphSequence seq = sequence_schedule({make_cycle(6), make_line(6)},
                                        GraphSequence::Mode::periodic, 0);
  OpinionProfile x0 = parse_profile("x-set:0,3", 6);
  RunTrace tr = run_consensus(seq, x0, 777);
  CHECK(tr.terminated);
  CHECK(tr.nontrivial_updates <= nontrivial_budget(x0));
}
