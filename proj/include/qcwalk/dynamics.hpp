#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcwalk/graph.hpp"
#include "qcwalk/schedule.hpp"

namespace qcwalk {

/// Integer opinion vector with its conserved sum cached.
struct OpinionProfile {
  std::vector<long long> values;
  long long total = 0;

  int size() const { return static_cast<int>(values.size()); }
};

OpinionProfile make_profile(std::vector<long long> values);

/// "x-set:a,b" (0 at a, 2 at b, 1 elsewhere), "list:v0,v1,...", or a file of
/// whitespace-separated integers.
OpinionProfile parse_profile(const std::string& spec, int n);

/// Pairwise interaction: values differing by >= 2 move one unit toward each
/// other, values differing by 1 swap (same outcome), equal values hold.
OpinionProfile quantized_update(const OpinionProfile& x, int i, int j);

bool is_nontrivial(const OpinionProfile& x, int i, int j);

/// Sum of squared deviations from the conserved mean.
double lyapunov(const OpinionProfile& x);

/// n * lyapunov as an exact integer (n*sum(x^2) - total^2): lets tests check
/// monotonicity and the >=2 drop without floating point.
long long lyapunov_scaled(const OpinionProfile& x);

/// ceil((L-l)^2 * n / 8) — the cap on nontrivial updates of any run.
long long nontrivial_budget(const OpinionProfile& x0);

bool in_consensus(const OpinionProfile& x);  // max - min <= 1

struct RunTrace {
  long long steps_to_consensus = 0;
  long long nontrivial_updates = 0;
  std::vector<double> lyapunov_series;  // filled only when requested
  bool terminated = false;
  std::uint64_t seed = 0;
};

inline constexpr long long kDefaultMaxSteps = 1'000'000'000LL;

RunTrace run_consensus(const Graph& g, const OpinionProfile& x0, std::uint64_t seed,
                       long long max_steps = kDefaultMaxSteps, bool record_lyapunov = false);
RunTrace run_consensus(const GraphSequence& schedule, const OpinionProfile& x0, std::uint64_t seed,
                       long long max_steps = kDefaultMaxSteps, bool record_lyapunov = false);

}  // namespace qcwalk
