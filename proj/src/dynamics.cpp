#include "qcwalk/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qcwalk/rng.hpp"

namespace qcwalk {

OpinionProfile make_profile(std::vector<long long> values) {
  if (values.empty()) throw std::invalid_argument("empty opinion profile");
  OpinionProfile x;
  x.total = std::accumulate(values.begin(), values.end(), 0LL);
  x.values = std::move(values);
  return x;
}

OpinionProfile parse_profile(const std::string& spec, int n) {
  if (spec.rfind("x-set:", 0) == 0) {
    std::istringstream args(spec.substr(6));
    int a = -1, b = -1;
    char comma = 0;
    if (!(args >> a >> comma >> b) || comma != ',')
      throw std::invalid_argument("x-set pattern wants 'x-set:a,b'");
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw std::invalid_argument("x-set positions out of range");
    std::vector<long long> v(n, 1);
    v[a] = 0;
    v[b] = 2;
    return make_profile(std::move(v));
  }
  if (spec.rfind("list:", 0) == 0) {
    std::vector<long long> v;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoll(item));
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("profile list length != n");
    return make_profile(std::move(v));
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open profile '" + spec + "'");
  std::vector<long long> v;
  long long x;
  while (in >> x) v.push_back(x);
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("profile file has " + std::to_string(v.size()) +
                                " values, graph has " + std::to_string(n));
  return make_profile(std::move(v));
}

namespace {

// single in-place interaction; returns whether it was nontrivial
bool apply_update(OpinionProfile& x, int i, int j) {
  long long& a = x.values[i];
  long long& b = x.values[j];
  bool nontrivial = std::llabs(a - b) >= 2;
  if (a > b) {
    --a;
    ++b;
  } else if (a < b) {
    ++a;
    --b;
  }
  return nontrivial;
}

}  // namespace

OpinionProfile quantized_update(const OpinionProfile& x, int i, int j) {
  if (i == j) throw std::invalid_argument("self-interaction");
  OpinionProfile y = x;
  apply_update(y, i, j);
  return y;
}

bool is_nontrivial(const OpinionProfile& x, int i, int j) {
  return std::llabs(x.values[i] - x.values[j]) >= 2;
}

double lyapunov(const OpinionProfile& x) {
  double mean = static_cast<double>(x.total) / x.size();
  double v = 0;
  for (long long a : x.values) {
    double d = static_cast<double>(a) - mean;
    v += d * d;
  }
  return v;
}

long long lyapunov_scaled(const OpinionProfile& x) {
  long long sq = 0;
  for (long long a : x.values) sq += a * a;
  return static_cast<long long>(x.size()) * sq - x.total * x.total;
}

long long nontrivial_budget(const OpinionProfile& x0) {
  auto [lo, hi] = std::minmax_element(x0.values.begin(), x0.values.end());
  long long spread = *hi - *lo;
  return (spread * spread * x0.size() + 7) / 8;
}

bool in_consensus(const OpinionProfile& x) {
  auto [lo, hi] = std::minmax_element(x.values.begin(), x.values.end());
  return *hi - *lo <= 1;
}

namespace {

// One loop serves both the static and the time-varying run: `pick` hands
// back the edge list for step t.
template <typename EdgesAt>
RunTrace run_loop(EdgesAt edges_at, int n, const OpinionProfile& x0, std::uint64_t seed,
                  long long max_steps, bool record_lyapunov) {
  OpinionProfile x = x0;
  QCW_CHECK(x.size() == n, "profile length != node count");
  RunTrace trace;
  trace.seed = seed;

  // Histogram over the initial value range; updates keep values inside it.
  auto [lo_it, hi_it] = std::minmax_element(x.values.begin(), x.values.end());
  long long lo = *lo_it, hi = *hi_it;
  std::vector<long long> count(static_cast<std::size_t>(hi - lo + 1), 0);
  for (long long v : x.values) ++count[static_cast<std::size_t>(v - lo)];
  long long cur_min = lo, cur_max = hi;
  auto settle = [&] {
    while (count[static_cast<std::size_t>(cur_min - lo)] == 0) ++cur_min;
    while (count[static_cast<std::size_t>(cur_max - lo)] == 0) --cur_max;
  };

  Rng rng = Rng::derived(seed, 0);
  if (record_lyapunov) trace.lyapunov_series.push_back(lyapunov(x));
  if (cur_max - cur_min <= 1) {
    trace.terminated = true;
    return trace;
  }
  for (long long t = 1; t <= max_steps; ++t) {
    const auto& edges = edges_at(t - 1);
    auto [i, j] = edges[rng.below(edges.size())];
    long long before_i = x.values[i], before_j = x.values[j];
    if (apply_update(x, i, j)) {
      ++trace.nontrivial_updates;
      // the multiset only changes on nontrivial updates
      --count[static_cast<std::size_t>(before_i - lo)];
      --count[static_cast<std::size_t>(before_j - lo)];
      ++count[static_cast<std::size_t>(x.values[i] - lo)];
      ++count[static_cast<std::size_t>(x.values[j] - lo)];
      settle();
    }
    if (record_lyapunov) trace.lyapunov_series.push_back(lyapunov(x));
    if (cur_max - cur_min <= 1) {
      trace.steps_to_consensus = t;
      trace.terminated = true;
      break;
    }
  }
  if (!trace.terminated) trace.steps_to_consensus = max_steps;
  QCW_CHECK(x.total == x0.total, "sum not conserved");
  QCW_CHECK(trace.nontrivial_updates <= nontrivial_budget(x0), "nontrivial budget exceeded");
  return trace;
}

}  // namespace

RunTrace run_consensus(const Graph& g, const OpinionProfile& x0, std::uint64_t seed,
                       long long max_steps, bool record_lyapunov) {
  QCW_CHECK(g.connected, "run_consensus needs a connected graph");
  return run_loop([&](long long) -> const std::vector<std::pair<int, int>>& { return g.edges; },
                  g.n, x0, seed, max_steps, record_lyapunov);
}

RunTrace run_consensus(const GraphSequence& schedule, const OpinionProfile& x0, std::uint64_t seed,
                       long long max_steps, bool record_lyapunov) {
  return run_loop(
      [&](long long t) -> const std::vector<std::pair<int, int>>& { return schedule.graph_at(t).edges; },
      schedule.n, x0, seed, max_steps, record_lyapunov);
}

}  // namespace qcwalk
