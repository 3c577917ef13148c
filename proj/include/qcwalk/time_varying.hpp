#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qcwalk/schedule.hpp"
#include "qcwalk/walkers.hpp"

namespace qcwalk {

struct MixingTrace {
  std::vector<double> norms;          // ||p(t) - pi||_2, index 0..horizon
  std::vector<double> claimed;        // norms[0] * prod of claimed per-step factors
  std::vector<long long> flagged_steps;  // steps where the claimed contraction failed
};

/// Drives p(t+1) = Kbar(t) p(t) on the n^2 product states and compares the
/// observed distance to uniform against the claimed per-step contraction.
MixingTrace mixing_trace(const GraphSequence& schedule, Eigen::VectorXd p0, int horizon);

/// Point mass on the ordered pair (a, b) as a product-state distribution.
Eigen::VectorXd pair_point_mass(int n, int a, int b);

struct TvMeetingReport {
  double mean = 0;
  double stderr_ = 0;
  double bound = 0;  // 32 n^2 m_max D_max (1 + ln n)
  bool within_bound = false;
  long long trials = 0;
  long long censored = 0;
};

TvMeetingReport meeting_time_tv(const GraphSequence& schedule, WalkerPair start, long long trials,
                                std::uint64_t seed, ProcessKind kind = ProcessKind::original);

}  // namespace qcwalk
