#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcwalk/graph.hpp"
#include "qcwalk/rng.hpp"
#include "qcwalk/schedule.hpp"

namespace qcwalk {

/// Positions of the low and high token. States with pos0 == pos2 never occur
/// before absorption; meeting is the connecting edge firing.
struct WalkerPair {
  int pos0 = 0;
  int pos2 = 0;
};

enum class ProcessKind { original, virtual_ };

struct StepResult {
  bool met = false;
  WalkerPair next;
};

/// Pure transition of the original process for a given fired edge (by index
/// into g.edges). Post-move coincidence is unreachable and checked.
StepResult original_step(const Graph& g, WalkerPair w, int edge_index);

/// Per-edge selection law of the virtual process from state w (requires the
/// degree-sum condition). Non-adjacent pairs: uniform. Adjacent: connecting
/// edge twice, walker edges once, leftover mass spread over far edges.
std::vector<double> virtual_edge_distribution(const Graph& g, WalkerPair w);

struct MeetingSample {
  long long steps = 0;
  bool censored = false;
};

inline constexpr long long kWalkerStepCap = 1'000'000'000LL;

MeetingSample simulate_meeting(ProcessKind kind, const Graph& g, WalkerPair start, Rng& rng,
                               long long cap = kWalkerStepCap);
MeetingSample simulate_meeting(ProcessKind kind, const GraphSequence& schedule, WalkerPair start,
                               Rng& rng, long long cap = kWalkerStepCap);

struct PairEstimate {
  int start_a = 0;
  int start_b = 0;
  double mean = 0;
  double stderr_ = 0;
  long long trials = 0;
  long long censored = 0;
};

struct MaxMeetingEstimate {
  std::vector<PairEstimate> pairs;
  double max_mean = 0;
  double max_stderr = 0;
  int argmax_a = 0;
  int argmax_b = 0;
};

/// Monte Carlo mean meeting time per ordered start pair; all pairs for
/// n <= 12, otherwise callers must pass the subset to probe.
MaxMeetingEstimate estimate_max_meeting(
    ProcessKind kind, const Graph& g, long long trials, std::uint64_t seed,
    const std::vector<std::pair<int, int>>* subset = nullptr, long long cap = kWalkerStepCap);

}  // namespace qcwalk
