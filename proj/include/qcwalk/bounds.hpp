#pragma once

#include <string>
#include <vector>

#include "qcwalk/exact.hpp"
#include "qcwalk/graph.hpp"

namespace qcwalk {

/// Ordered-pair states collapsed to classes by walker distance; a pessimistic
/// 1-D chain whose absorption time dominates the true worst-case meeting time.
struct BDChain {
  int num_classes = 0;              // D + 1 including the absorbing class
  std::vector<int> class_size;      // ordered pair states per class
  std::vector<double> p_down;       // index 1..D meaningful
  std::vector<double> p_stay;
  std::vector<double> p_up;
};

/// Two readings of the per-class down probability: the literal minimum over a
/// single target state, or the minimum total mass into the class below.
enum class DownReading { single_target, class_mass };

BDChain birth_death_chain(const Graph& g, DownReading reading = DownReading::class_mass);

/// Expected steps from class `start` to the absorbing class; +inf when some
/// p_down on the way is zero.
double bd_hitting_bound(const BDChain& chain, int start);

struct BoundCheck {
  std::string name;
  double value = 0;
  double reference = 0;
  bool has_reference = false;
  bool violated = false;
  bool diagnostic = false;  // violations expected/reported, never fatal
  double slack = 0;         // reference - value for upper bounds (sign per check)
};

struct BoundReport {
  std::string graph;
  std::vector<BoundCheck> checks;
  bool any_hard_violation() const;
};

/// The sandwich half-lazy <= worst meeting <= lazy <= 2nmD, plus the observed
/// tighter nmD comparison as a diagnostic.
BoundReport theorem3_bounds(const Graph& g);

/// Worst expected meeting time of a star with m edges: m(m+2)/2.
double star_closed_form(int m);

enum class LineFamily { cycle, line };

/// Closed forms for cycles/lines against the oracle, flags only (the cycle
/// formula is known to understate the oracle).
BoundReport corollary_formulas(LineFamily family, int n);

/// 32 n^2 m_max D_max (1 + ln n) — the explicit time-varying meeting bound.
double time_varying_bound(int n, int m_max, int d_max);

}  // namespace qcwalk
