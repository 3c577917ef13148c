#include "qcwalk/exact.hpp"

#include <algorithm>
#include <cmath>

namespace qcwalk {

namespace {

constexpr double kRowSumTol = 1e-12;

void require_oracle_size(const Graph& g) {
  QCW_CHECK(g.connected, "exact oracles need a connected graph");
  QCW_CHECK(g.n <= kOracleMaxNodes, "graph beyond the dense-oracle range");
}

void check_stochastic(const Eigen::MatrixXd& p) {
  for (int i = 0; i < p.rows(); ++i) {
    QCW_CHECK(p.row(i).minCoeff() >= -kRowSumTol, "negative transition probability");
    QCW_CHECK(std::abs(p.row(i).sum() - 1.0) <= 1e-9, "row sum != 1");
  }
}

}  // namespace

ChainMatrix lazy_transition_matrix(const Graph& g) {
  require_oracle_size(g);
  int n = g.n, m = g.m();
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges) p(u, v) = p(v, u) = 1.0 / m;
  for (int x = 0; x < n; ++x) p(x, x) = 1.0 - static_cast<double>(g.degree[x]) / m;
  check_stochastic(p);
  return {p, ChainMatrix::Kind::stochastic, "lazy"};
}

ChainMatrix simple_transition_matrix(const Graph& g) {
  require_oracle_size(g);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto [u, v] : g.edges) {
    p(u, v) = 1.0 / g.degree[u];
    p(v, u) = 1.0 / g.degree[v];
  }
  check_stochastic(p);
  return {p, ChainMatrix::Kind::stochastic, "simple"};
}

Eigen::VectorXd hitting_times(const ChainMatrix& P, int target) {
  const auto& p = P.mat;
  auto n = static_cast<int>(p.rows());
  QCW_CHECK(target >= 0 && target < n, "target out of range");
  // states other than target, in order
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 0; i < n; ++i)
    if (i != target) keep.push_back(i);
  auto k = static_cast<int>(keep.size());
  Eigen::MatrixXd a(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) a(r, c) = (r == c ? 1.0 : 0.0) - p(keep[r], keep[c]);
  Eigen::VectorXd h = a.partialPivLu().solve(Eigen::VectorXd::Ones(k));
  QCW_CHECK(h.allFinite(), "singular hitting system (disconnected chain?)");
  Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < k; ++r) full(keep[r]) = h(r);
  return full;
}

Eigen::MatrixXd hitting_table(const ChainMatrix& P) {
  auto n = static_cast<int>(P.mat.rows());
  Eigen::MatrixXd h(n, n);
  for (int target = 0; target < n; ++target) h.col(target) = hitting_times(P, target);
  return h;
}

namespace {

// (L + J/n) is positive definite and shifts only along the all-ones
// direction, which cancels in every resistance combination.
Eigen::MatrixXd grounded_laplacian_inverse(const Graph& g) {
  Eigen::MatrixXd l = laplacian_matrix(g);
  l.array() += 1.0 / g.n;
  return l.partialPivLu().inverse();
}

}  // namespace

double effective_resistance(const Graph& g, int x, int y) {
  QCW_CHECK(g.connected, "resistance needs a connected graph");
  if (x == y) return 0.0;
  Eigen::MatrixXd l = laplacian_matrix(g);
  l.array() += 1.0 / g.n;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(g.n);
  rhs(x) = 1.0;
  rhs(y) = -1.0;
  Eigen::VectorXd v = l.partialPivLu().solve(rhs);
  return v(x) - v(y);
}

Eigen::MatrixXd resistance_matrix(const Graph& g) {
  QCW_CHECK(g.connected, "resistance needs a connected graph");
  Eigen::MatrixXd k = grounded_laplacian_inverse(g);
  Eigen::MatrixXd r(g.n, g.n);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) r(x, y) = k(x, x) + k(y, y) - 2.0 * k(x, y);
  return r;
}

VoltageProfile visit_voltage_profile(const Graph& g, int a, int z) {
  require_oracle_size(g);
  QCW_CHECK(a != z, "source equals sink");
  int n = g.n;
  ChainMatrix simple = simple_transition_matrix(g);

  // expected visits to x before hitting z, started at a: row a of (I-Q)^-1
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (i != z) keep.push_back(i);
  auto k = static_cast<int>(keep.size());
  Eigen::MatrixXd iq(k, k);
  int a_pos = -1;
  for (int r = 0; r < k; ++r) {
    if (keep[r] == a) a_pos = r;
    for (int c = 0; c < k; ++c) iq(r, c) = (r == c ? 1.0 : 0.0) - simple.mat(keep[r], keep[c]);
  }
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(k);
  unit(a_pos) = 1.0;
  Eigen::VectorXd visits = iq.transpose().partialPivLu().solve(unit);

  VoltageProfile out;
  out.by_visits = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < k; ++r) out.by_visits(keep[r]) = visits(r) / g.degree[keep[r]];

  Eigen::MatrixXd res = resistance_matrix(g);
  out.by_resistance = Eigen::VectorXd::Zero(n);
  for (int x = 0; x < n; ++x) out.by_resistance(x) = 0.5 * (res(a, z) + res(z, x) - res(a, x));
  out.discrepancy = (out.by_visits - out.by_resistance).cwiseAbs().maxCoeff();
  return out;
}

ResistanceHitting hitting_from_resistance(const Graph& g, int a, int z) {
  QCW_CHECK(g.connected, "resistance needs a connected graph");
  Eigen::MatrixXd res = resistance_matrix(g);
  ResistanceHitting out;
  double plain_sum = 0;
  for (int x = 0; x < g.n; ++x) {
    double term = res(a, z) + res(z, x) - res(a, x);
    plain_sum += term;
    out.h_simple += 0.5 * g.degree[x] * term;
    out.h_lazy_paper += 0.5 * (g.m() + g.degree[x]) * term;
  }
  out.h_lazy_corrected = 0.5 * g.m() * plain_sum;
  return out;
}

std::vector<int> hidden_vertices(const ChainMatrix& P) {
  Eigen::MatrixXd h = hitting_table(P);
  auto n = static_cast<int>(h.rows());
  std::vector<int> out;
  for (int w = 0; w < n; ++w) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = h(w, x) <= h(x, w) + 1e-9;
    if (ok) out.push_back(w);
  }
  return out;
}

int hidden_vertex(const ChainMatrix& P) {
  auto all = hidden_vertices(P);
  QCW_CHECK(!all.empty(), "no hidden vertex found; reversible chains must have one");
  return all.front();
}

double potential_phi(const Graph& g, int x, int y) {
  ChainMatrix lazy = lazy_transition_matrix(g);
  Eigen::MatrixXd h = hitting_table(lazy);
  int w = hidden_vertex(lazy);
  return h(x, y) + h(y, w) - h(w, y);
}

Eigen::MatrixXd potential_table(const Graph& g) {
  ChainMatrix lazy = lazy_transition_matrix(g);
  Eigen::MatrixXd h = hitting_table(lazy);
  int w = hidden_vertex(lazy);
  Eigen::MatrixXd phi(g.n, g.n);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) phi(x, y) = h(x, y) + h(y, w) - h(w, y);
  return phi;
}

PairTransition pair_transitions(const Graph& g, WalkerPair w, ProcessKind kind) {
  QCW_CHECK(w.pos0 != w.pos2, "diagonal state is absorbing");
  int m = g.m();
  PairTransition tr;
  bool adjacent = g.has_edge(w.pos0, w.pos2);
  if (kind == ProcessKind::virtual_ && adjacent) {
    auto rep = assumption_check(g);
    QCW_CHECK(rep.holds, "virtual process undefined when the degree-sum condition fails");
    tr.meet = 2.0 / m;
    for (int nb : g.adj[w.pos0])
      if (nb != w.pos2) tr.moves.push_back({{nb, w.pos2}, 1.0 / m});
    for (int nb : g.adj[w.pos2])
      if (nb != w.pos0) tr.moves.push_back({{w.pos0, nb}, 1.0 / m});
    tr.hold = static_cast<double>(m - g.degree[w.pos0] - g.degree[w.pos2]) / m;
    QCW_CHECK(tr.hold >= -kRowSumTol, "negative hold mass");
    return tr;
  }
  // original law (and the virtual law away from adjacency): every edge 1/m
  for (int e = 0; e < m; ++e) {
    StepResult r = original_step(g, w, e);
    if (r.met)
      tr.meet += 1.0 / m;
    else if (r.next.pos0 == w.pos0 && r.next.pos2 == w.pos2)
      tr.hold += 1.0 / m;
    else
      tr.moves.push_back({r.next, 1.0 / m});
  }
  return tr;
}

MeetingTable exact_meeting_times(const Graph& g, ProcessKind kind) {
  require_oracle_size(g);
  if (kind == ProcessKind::virtual_) {
    auto rep = assumption_check(g);
    if (!rep.holds)
      throw std::invalid_argument("virtual process undefined on " + rep.failure_shape +
                                  "-shaped graphs");
  }
  int n = g.n;
  // transient states: ordered pairs (x,y), x != y
  std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
  std::vector<WalkerPair> states;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) {
        index[static_cast<std::size_t>(x) * n + y] = static_cast<int>(states.size());
        states.push_back({x, y});
      }
  auto k = static_cast<int>(states.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(k, k);
  for (int s = 0; s < k; ++s) {
    PairTransition tr = pair_transitions(g, states[s], kind);
    a(s, s) -= tr.hold;
    double mass = tr.hold + tr.meet;
    for (auto& [next, p] : tr.moves) {
      int t = index[static_cast<std::size_t>(next.pos0) * n + next.pos2];
      QCW_CHECK(t >= 0, "move landed on the diagonal");
      a(s, t) -= p;
      mass += p;
    }
    QCW_CHECK(std::abs(mass - 1.0) <= 1e-9, "pair-state law does not sum to 1");
  }
  Eigen::VectorXd t = a.partialPivLu().solve(Eigen::VectorXd::Ones(k));
  QCW_CHECK(t.allFinite(), "singular product chain");

  MeetingTable out;
  out.times = Eigen::MatrixXd::Zero(n, n);
  out.max_time = 0;
  for (int s = 0; s < k; ++s) {
    double val = t(s);
    out.times(states[s].pos0, states[s].pos2) = val;
    if (val > out.max_time) {
      out.max_time = val;
      out.argmax_x = states[s].pos0;
      out.argmax_y = states[s].pos2;
    }
  }
  return out;
}

double harmonic_residual(const Eigen::MatrixXd& f, const Graph& g) {
  int n = g.n;
  QCW_CHECK(f.rows() == n && f.cols() == n, "pair table has wrong shape");
  double worst = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      double acc = 0;
      for (int j : g.adj[x]) acc += f(j, y);
      for (int j : g.adj[y]) acc += f(x, j);
      double avg = acc / (g.degree[x] + g.degree[y]);
      worst = std::max(worst, std::abs(f(x, y) - avg));
    }
  return worst;
}

double lazy_hitting_max(const Graph& g) {
  return hitting_table(lazy_transition_matrix(g)).maxCoeff();
}

}  // namespace qcwalk
