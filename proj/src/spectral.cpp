#include "qcwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qcwalk {

Spectrum symmetric_spectrum(const Eigen::MatrixXd& mx) {
  if (mx.rows() != mx.cols() || (mx - mx.transpose()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("symmetric_spectrum wants a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mx);
  QCW_CHECK(solver.info() == Eigen::Success, "eigensolver failed");
  Spectrum s;
  s.values = solver.eigenvalues().reverse();
  const auto& vecs = solver.eigenvectors();
  s.reconstruction_residual =
      (mx * vecs - vecs * solver.eigenvalues().asDiagonal()).cwiseAbs().maxCoeff();
  QCW_CHECK(s.reconstruction_residual <= 1e-8, "eigenpair reconstruction above tolerance");
  return s;
}

double random_target_residual(const ChainMatrix& P) {
  const auto& p = P.mat;
  auto n = static_cast<int>(p.rows());
  QCW_CHECK((p - p.transpose()).cwiseAbs().maxCoeff() <= 1e-9,
            "random-target check wants a symmetric chain");
  Spectrum s = symmetric_spectrum(p);
  QCW_CHECK(n < 2 || s.values(1) < 1.0 - 1e-12, "chain not irreducible");
  double eig_side = 0;
  for (int k = 1; k < n; ++k) eig_side += 1.0 / (1.0 - s.values(k));
  Eigen::MatrixXd h = hitting_table(P);
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    double hit_side = h.row(i).sum() / n;  // uniform stationary law
    worst = std::max(worst, std::abs(hit_side - eig_side));
  }
  return worst;
}

double product_spectrum_check(const Graph& g) {
  QCW_CHECK(g.n <= kSquareSpectrumMaxNodes, "square spectrum capped at n=40");
  Spectrum base = symmetric_spectrum(laplacian_matrix(g));
  std::vector<double> sums;
  sums.reserve(static_cast<std::size_t>(g.n) * g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) sums.push_back(base.values(i) + base.values(j));
  std::sort(sums.begin(), sums.end());
  Spectrum square = symmetric_spectrum(laplacian_matrix(cartesian_square(g)));
  double worst = 0;
  auto k = static_cast<int>(sums.size());
  for (int i = 0; i < k; ++i)
    worst = std::max(worst, std::abs(sums[static_cast<std::size_t>(i)] - square.values(k - 1 - i)));
  return worst;
}

MaxEigReport laplacian_max_eig_report(const Graph& g) {
  MaxEigReport rep;
  rep.alpha1 = symmetric_spectrum(laplacian_matrix(g)).values(0);
  for (auto [u, v] : g.edges)
    rep.degree_sum_bound = std::max(rep.degree_sum_bound,
                                    static_cast<double>(g.degree[u] + g.degree[v]));
  QCW_CHECK(rep.alpha1 <= rep.degree_sum_bound + 1e-8, "degree-sum eigenvalue bound broken");
  rep.half_refinement = g.m() - 0.5;
  rep.violated = rep.alpha1 > rep.half_refinement + 1e-9;
  return rep;
}

ChainMatrix kbar_matrix(const Graph& g) {
  QCW_CHECK(g.n <= kSquareSpectrumMaxNodes, "square chain capped at n=40");
  auto rep = assumption_check(g);
  if (!rep.holds)
    throw std::invalid_argument("modified product chain undefined on " + rep.failure_shape +
                                "-shaped graphs");
  Eigen::MatrixXd k =
      Eigen::MatrixXd::Identity(g.n * g.n, g.n * g.n) - laplacian_matrix(cartesian_square(g)) / g.m();
  QCW_CHECK(k.minCoeff() >= -1e-12, "negative entry in the modified chain");
  for (int i = 0; i < k.rows(); ++i) QCW_CHECK(std::abs(k.row(i).sum() - 1.0) <= 1e-9, "row sum != 1");
  return {k, ChainMatrix::Kind::stochastic, "kbar"};
}

ContractionReport contraction_factor(const Graph& g) {
  ContractionReport rep;
  Spectrum ks = symmetric_spectrum(kbar_matrix(g).mat);
  rep.alpha2_kbar = ks.values(1);
  rep.alpha_min_kbar = ks.values(ks.values.size() - 1);
  rep.alpha2_lazy = symmetric_spectrum(lazy_transition_matrix(g).mat).values(1);
  rep.alpha_min_from_laplacian =
      1.0 - 2.0 * symmetric_spectrum(laplacian_matrix(g)).values(0) / g.m();
  rep.exact_factor = std::max(std::abs(rep.alpha2_kbar), std::abs(rep.alpha_min_kbar));
  rep.claimed_bound = 1.0 - 1.0 / (2.0 * g.n * g.m() * diameter(g));
  rep.flagged = rep.exact_factor > rep.claimed_bound + 1e-12;
  return rep;
}

}  // namespace qcwalk
