#include "qcwalk/schedule.hpp"

#include <fstream>
#include <sstream>

#include "qcwalk/rng.hpp"

namespace qcwalk {

const Graph& GraphSequence::graph_at(long long t) const {
  QCW_CHECK(!members.empty(), "empty schedule");
  if (mode == Mode::periodic) return members[static_cast<std::size_t>(t % static_cast<long long>(members.size()))];
  // Stateless draw: hash (seed, t) so any step is addressable without
  // replaying the sequence, and the walker RNG stream stays untouched.
  Rng r = Rng::derived(seed, static_cast<std::uint64_t>(t));
  return members[r.below(members.size())];
}

GraphSequence sequence_schedule(std::vector<Graph> members, GraphSequence::Mode mode,
                                std::uint64_t seed) {
  if (members.empty()) throw std::invalid_argument("schedule needs at least one graph");
  GraphSequence s;
  s.mode = mode;
  s.seed = seed;
  s.n = members.front().n;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Graph& g = members[i];
    if (g.n != s.n)
      throw std::invalid_argument("schedule member " + std::to_string(i) + " has n=" +
                                  std::to_string(g.n) + ", expected " + std::to_string(s.n));
    if (!g.connected) {
      s.b_connected = false;
      throw std::invalid_argument("schedule member " + std::to_string(i) + " is disconnected");
    }
    if (!assumption_check(g).holds)
      throw std::invalid_argument("schedule member " + std::to_string(i) +
                                  " violates the degree-sum condition");
    s.m_max = std::max(s.m_max, g.m());
    s.d_max = std::max(s.d_max, diameter(g));
  }
  s.members = std::move(members);
  return s;
}

GraphSequence schedule_from_stream(std::istream& in, std::uint64_t seed, GraphSequence::Mode mode) {
  std::vector<Graph> members;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream trim(line);
    std::string spec;
    trim >> spec;
    if (spec.empty()) continue;
    members.push_back(parse_graph_spec(spec));
  }
  return sequence_schedule(std::move(members), mode, seed);
}

GraphSequence schedule_from_file(const std::string& path, std::uint64_t seed,
                                 GraphSequence::Mode mode) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open schedule file '" + path + "'");
  return schedule_from_stream(in, seed, mode);
}

}  // namespace qcwalk
