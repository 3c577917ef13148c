#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qcwalk/graph.hpp"
#include "qcwalk/walkers.hpp"

namespace qcwalk {

/// Largest node count the dense absorbing-chain oracles accept (n^2-state
/// product solves stay desk-sized below this).
inline constexpr int kOracleMaxNodes = 63;

struct ChainMatrix {
  enum class Kind { stochastic, laplacian, substochastic };
  Eigen::MatrixXd mat;
  Kind kind = Kind::stochastic;
  std::string label;
};

/// Lazy single-token law: P(x,x) = 1 - d(x)/m, P(x,y) = 1/m on edges.
/// Symmetric and doubly stochastic.
ChainMatrix lazy_transition_matrix(const Graph& g);

/// Classic simple walk: P(x,y) = 1/d(x) on edges.
ChainMatrix simple_transition_matrix(const Graph& g);

/// h(target) = 0, h(x) = 1 + sum_y P(x,y) h(y), solved densely.
Eigen::VectorXd hitting_times(const ChainMatrix& P, int target);

/// H(x, y) = expected steps x -> y; one absorbing solve per target column.
Eigen::MatrixXd hitting_table(const ChainMatrix& P);

double effective_resistance(const Graph& g, int x, int y);
Eigen::MatrixXd resistance_matrix(const Graph& g);

struct VoltageProfile {
  Eigen::VectorXd by_visits;      // expected visits of the simple walk / degree
  Eigen::VectorXd by_resistance;  // (R(a,z) + R(z,x) - R(a,x)) / 2
  double discrepancy = 0;
};

/// The visit/voltage identity computed along both routes.
VoltageProfile visit_voltage_profile(const Graph& g, int a, int z);

struct ResistanceHitting {
  double h_simple = 0;          // 1/2 sum_x d(x) [R(a,z) + R(z,x) - R(a,x)]
  double h_lazy_corrected = 0;  // (m/2) sum_x [..]; matches lazy solves
  double h_lazy_paper = 0;      // sum_x (m+d(x))/2 [..] as printed; does not
};

ResistanceHitting hitting_from_resistance(const Graph& g, int a, int z);

/// First vertex w with H(w,x) <= H(x,w) for all x; throws check_error when no
/// vertex qualifies.
int hidden_vertex(const ChainMatrix& P);
std::vector<int> hidden_vertices(const ChainMatrix& P);

/// H_Z(x,y) + H_Z(y,w) - H_Z(w,y) with w the lazy chain's hidden vertex.
double potential_phi(const Graph& g, int x, int y);
Eigen::MatrixXd potential_table(const Graph& g);

/// Transition masses out of one ordered-pair state under either coupled law.
struct PairTransition {
  double meet = 0;  // mass absorbed by the connecting edge
  double hold = 0;  // mass keeping both walkers in place
  std::vector<std::pair<WalkerPair, double>> moves;
};
PairTransition pair_transitions(const Graph& g, WalkerPair w, ProcessKind kind);

struct MeetingTable {
  Eigen::MatrixXd times;  // ordered pairs; zero diagonal
  double max_time = 0;
  int argmax_x = 0;
  int argmax_y = 0;
};

/// Absorbing solve on the full ordered-pair chain built edge by edge.
MeetingTable exact_meeting_times(const Graph& g, ProcessKind kind);

/// Max interior defect of f against the simple product walk's averaging
/// operator (the zero-residual property of 1/2*potential - meeting).
double harmonic_residual(const Eigen::MatrixXd& f, const Graph& g);

/// Convenience: max-pair lazy hitting time.
double lazy_hitting_max(const Graph& g);

}  // namespace qcwalk
