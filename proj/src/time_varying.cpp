#include "qcwalk/time_varying.hpp"

#include <cmath>

#include "qcwalk/bounds.hpp"
#include "qcwalk/spectral.hpp"

namespace qcwalk {

Eigen::VectorXd pair_point_mass(int n, int a, int b) {
  QCW_CHECK(a >= 0 && a < n && b >= 0 && b < n, "pair out of range");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<long>(n) * n);
  p(static_cast<long>(a) * n + b) = 1.0;
  return p;
}

MixingTrace mixing_trace(const GraphSequence& schedule, Eigen::VectorXd p0, int horizon) {
  int n = schedule.n;
  long states = static_cast<long>(n) * n;
  QCW_CHECK(p0.size() == states, "distribution has wrong dimension");
  QCW_CHECK(std::abs(p0.sum() - 1.0) <= 1e-9 && p0.minCoeff() >= -1e-12,
            "p0 is not a distribution");

  // one modified chain and claim factor per member
  std::vector<Eigen::MatrixXd> kbars;
  std::vector<double> factors;
  kbars.reserve(schedule.members.size());
  for (const Graph& g : schedule.members) {
    kbars.push_back(kbar_matrix(g).mat);
    factors.push_back(1.0 - 1.0 / (2.0 * g.n * g.m() * diameter(g)));
  }
  auto member_index = [&](const Graph& g) {
    for (std::size_t i = 0; i < schedule.members.size(); ++i)
      if (&schedule.members[i] == &g) return i;
    QCW_CHECK(false, "schedule returned a foreign graph");
    return std::size_t{0};
  };

  Eigen::VectorXd pi = Eigen::VectorXd::Constant(states, 1.0 / states);
  Eigen::VectorXd p = std::move(p0);
  MixingTrace trace;
  trace.norms.push_back((p - pi).norm());
  trace.claimed.push_back(trace.norms.front());
  for (int t = 0; t < horizon; ++t) {
    std::size_t idx = member_index(schedule.graph_at(t));
    p = kbars[idx] * p;  // symmetric, so transpose application is the same
    double norm = (p - pi).norm();
    trace.norms.push_back(norm);
    trace.claimed.push_back(trace.claimed.back() * factors[idx]);
    if (norm > trace.norms[static_cast<std::size_t>(t)] * factors[idx] + 1e-12)
      trace.flagged_steps.push_back(t);
  }
  return trace;
}

TvMeetingReport meeting_time_tv(const GraphSequence& schedule, WalkerPair start, long long trials,
                                std::uint64_t seed, ProcessKind kind) {
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  TvMeetingReport rep;
  rep.trials = trials;
  double sum = 0, sumsq = 0;
  for (long long t = 0; t < trials; ++t) {
    Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(t));
    MeetingSample ms = simulate_meeting(kind, schedule, start, rng);
    if (ms.censored) ++rep.censored;
    auto steps = static_cast<double>(ms.steps);
    sum += steps;
    sumsq += steps * steps;
  }
  rep.mean = sum / static_cast<double>(trials);
  double var =
      trials > 1 ? (sumsq - sum * sum / static_cast<double>(trials)) / static_cast<double>(trials - 1) : 0.0;
  rep.stderr_ = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
  rep.bound = time_varying_bound(schedule.n, schedule.m_max, schedule.d_max);
  rep.within_bound = rep.mean <= rep.bound;
  return rep;
}

}  // namespace qcwalk
