#pragma once

#include <Eigen/Dense>

#include "qcwalk/exact.hpp"
#include "qcwalk/graph.hpp"

namespace qcwalk {

/// Largest n for which the n^2-state product spectra are computed.
inline constexpr int kSquareSpectrumMaxNodes = 40;

struct Spectrum {
  Eigen::VectorXd values;  // descending
  double reconstruction_residual = 0;
};

/// Dense symmetric eigensolve; rejects non-symmetric input.
Spectrum symmetric_spectrum(const Eigen::MatrixXd& mx);

/// Gap between sum_j pi_j H(i,j) and sum_{k>=2} 1/(1 - alpha_k), worst start.
/// Wants a symmetric stochastic chain (uniform stationary law).
double random_target_residual(const ChainMatrix& P);

/// Multiset {lambda_i + lambda_j} vs the square's Laplacian spectrum.
double product_spectrum_check(const Graph& g);

struct MaxEigReport {
  double alpha1 = 0;             // top Laplacian eigenvalue
  double degree_sum_bound = 0;   // max over edges d(u)+d(v); always valid
  double half_refinement = 0;    // m - 1/2
  bool violated = false;         // alpha1 > m - 1/2
};

MaxEigReport laplacian_max_eig_report(const Graph& g);

/// Modified product chain I - L_{GxG}/m; nonnegative exactly when the
/// degree-sum condition holds (checked).
ChainMatrix kbar_matrix(const Graph& g);

struct ContractionReport {
  double alpha2_kbar = 0;
  double alpha_min_kbar = 0;
  double alpha2_lazy = 0;                // should equal alpha2_kbar
  double alpha_min_from_laplacian = 0;   // 1 - (2/m) alpha1(L); should equal alpha_min_kbar
  double exact_factor = 0;               // max(|alpha2|, |alpha_min|), top eigenvalue excluded
  double claimed_bound = 0;              // 1 - 1/(2nmD)
  bool flagged = false;                  // exact exceeds claimed
};

ContractionReport contraction_factor(const Graph& g);

}  // namespace qcwalk
