#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcwalk/graph.hpp"

namespace qcwalk {

/// A-priori graph sequence: either a periodic rotation through `members` or
/// a seeded draw from them per step. graph_at(t) is a pure function of
/// (mode, seed, t) so the schedule can never react to protocol state.
struct GraphSequence {
  enum class Mode { periodic, random_pool };

  Mode mode = Mode::periodic;
  std::vector<Graph> members;
  std::uint64_t seed = 0;
  int n = 0;
  int m_max = 0;
  int d_max = 0;
  bool b_connected = true;  // validity marker only: every member connected

  const Graph& graph_at(long long t) const;
  std::size_t period() const { return members.size(); }
};

/// Validates members (same n, connected, degree-sum condition) and computes
/// the m/D envelopes. Rejection names the offending member index.
GraphSequence sequence_schedule(std::vector<Graph> members, GraphSequence::Mode mode,
                                std::uint64_t seed = 0);

/// One graph spec per line; '#' starts a comment. Periodic mode.
GraphSequence schedule_from_stream(std::istream& in, std::uint64_t seed = 0,
                                   GraphSequence::Mode mode = GraphSequence::Mode::periodic);
GraphSequence schedule_from_file(const std::string& path, std::uint64_t seed = 0,
                                 GraphSequence::Mode mode = GraphSequence::Mode::periodic);

}  // namespace qcwalk
