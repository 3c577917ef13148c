#include "qcwalk/walkers.hpp"

#include <cmath>

namespace qcwalk {

StepResult original_step(const Graph& g, WalkerPair w, int edge_index) {
  QCW_CHECK(w.pos0 != w.pos2, "walkers already met");
  auto [u, v] = g.edges[static_cast<std::size_t>(edge_index)];
  WalkerPair next = w;
  if ((u == w.pos0 && v == w.pos2) || (u == w.pos2 && v == w.pos0)) return {true, next};
  if (u == next.pos0)
    next.pos0 = v;
  else if (v == next.pos0)
    next.pos0 = u;
  else if (u == next.pos2)
    next.pos2 = v;
  else if (v == next.pos2)
    next.pos2 = u;
  // Landing on the partner would require the fired edge to BE the connecting
  // edge, already handled above; keep the defensive meeting anyway.
  QCW_CHECK(next.pos0 != next.pos2, "walker coincidence outside the connecting edge");
  return {false, next};
}

std::vector<double> virtual_edge_distribution(const Graph& g, WalkerPair w) {
  QCW_CHECK(w.pos0 != w.pos2, "walkers already met");
  auto rep = assumption_check(g);
  if (!rep.holds)
    throw std::invalid_argument("virtual process undefined on " + rep.failure_shape +
                                "-shaped graphs (degree-sum condition fails)");
  int m = g.m();
  std::vector<double> p(static_cast<std::size_t>(m), 0.0);
  if (!g.has_edge(w.pos0, w.pos2)) {
    for (auto& x : p) x = 1.0 / m;
    return p;
  }
  int dsum = g.degree[w.pos0] + g.degree[w.pos2];
  int far = m + 1 - dsum;  // edges touching neither walker, plus one
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    bool at0 = (u == w.pos0 || v == w.pos0);
    bool at2 = (u == w.pos2 || v == w.pos2);
    if (at0 && at2)
      p[static_cast<std::size_t>(e)] = 2.0 / m;
    else if (at0 || at2)
      p[static_cast<std::size_t>(e)] = 1.0 / m;
    else
      p[static_cast<std::size_t>(e)] = static_cast<double>(m - dsum) / (static_cast<double>(m) * far);
  }
  return p;
}

namespace {

// O(1) draw from the adjacent-case law: which far edge fired never moves the
// walkers, so the draw collapses to blocks {meet, move low, move high, hold}
// with integer masses 2, d0-1, d2-1, m-d0-d2 out of m.
StepResult virtual_adjacent_step(const Graph& g, WalkerPair w, Rng& rng) {
  int m = g.m();
  int d0 = g.degree[w.pos0], d2 = g.degree[w.pos2];
  auto k = static_cast<long long>(rng.below(static_cast<std::uint64_t>(m)));
  if (k < 2) return {true, w};
  k -= 2;
  if (k < d0 - 1) {
    // k-th neighbor of pos0 skipping pos2
    for (int nb : g.adj[w.pos0]) {
      if (nb == w.pos2) continue;
      if (k-- == 0) return {false, {nb, w.pos2}};
    }
    QCW_CHECK(false, "neighbor walk out of range");
  }
  k -= d0 - 1;
  if (k < d2 - 1) {
    for (int nb : g.adj[w.pos2]) {
      if (nb == w.pos0) continue;
      if (k-- == 0) return {false, {w.pos0, nb}};
    }
    QCW_CHECK(false, "neighbor walk out of range");
  }
  return {false, w};
}

template <typename GraphAt>
MeetingSample meeting_loop(ProcessKind kind, GraphAt graph_at, WalkerPair start, Rng& rng,
                           long long cap) {
  QCW_CHECK(start.pos0 != start.pos2, "start positions must differ");
  WalkerPair w = start;
  for (long long t = 1; t <= cap; ++t) {
    const Graph& g = graph_at(t - 1);
    StepResult r = (kind == ProcessKind::virtual_ && g.has_edge(w.pos0, w.pos2))
                       ? virtual_adjacent_step(g, w, rng)
                       : original_step(g, w, rng.below_int(g.m()));
    if (r.met) return {t, false};
    w = r.next;
  }
  return {cap, true};
}

}  // namespace

MeetingSample simulate_meeting(ProcessKind kind, const Graph& g, WalkerPair start, Rng& rng,
                               long long cap) {
  QCW_CHECK(g.connected, "meeting needs a connected graph");
  if (kind == ProcessKind::virtual_) {
    auto rep = assumption_check(g);
    if (!rep.holds)
      throw std::invalid_argument("virtual process undefined on " + rep.failure_shape +
                                  "-shaped graphs");
  }
  return meeting_loop(kind, [&](long long) -> const Graph& { return g; }, start, rng, cap);
}

MeetingSample simulate_meeting(ProcessKind kind, const GraphSequence& schedule, WalkerPair start,
                               Rng& rng, long long cap) {
  return meeting_loop(kind, [&](long long t) -> const Graph& { return schedule.graph_at(t); },
                      start, rng, cap);
}

MaxMeetingEstimate estimate_max_meeting(ProcessKind kind, const Graph& g, long long trials,
                                        std::uint64_t seed,
                                        const std::vector<std::pair<int, int>>* subset,
                                        long long cap) {
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  std::vector<std::pair<int, int>> starts;
  if (subset) {
    starts = *subset;
  } else {
    if (g.n > 12)
      throw std::invalid_argument("all-pair start enumeration capped at n=12; pass a start list");
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b)
        if (a != b) starts.emplace_back(a, b);
  }
  MaxMeetingEstimate out;
  out.max_mean = -1;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    auto [a, b] = starts[s];
    double sum = 0, sumsq = 0;
    long long censored = 0;
    for (long long t = 0; t < trials; ++t) {
      Rng rng = Rng::derived(seed, s * static_cast<std::uint64_t>(trials) + static_cast<std::uint64_t>(t));
      MeetingSample ms = simulate_meeting(kind, g, {a, b}, rng, cap);
      if (ms.censored) ++censored;
      auto steps = static_cast<double>(ms.steps);
      sum += steps;
      sumsq += steps * steps;
    }
    PairEstimate pe;
    pe.start_a = a;
    pe.start_b = b;
    pe.trials = trials;
    pe.censored = censored;
    pe.mean = sum / static_cast<double>(trials);
    double var = trials > 1 ? (sumsq - sum * sum / static_cast<double>(trials)) / static_cast<double>(trials - 1) : 0.0;
    pe.stderr_ = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
    out.pairs.push_back(pe);
    if (pe.mean > out.max_mean) {
      out.max_mean = pe.mean;
      out.max_stderr = pe.stderr_;
      out.argmax_a = a;
      out.argmax_b = b;
    }
  }
  return out;
}

}  // namespace qcwalk
