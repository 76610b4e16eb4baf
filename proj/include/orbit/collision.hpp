#pragma once

#include <cstdint>
#include <vector>

#include "orbit/density_matrix.hpp"
#include "orbit/spectrum.hpp"
#include "orbit/tables.hpp"

namespace orbit {

enum class CollisionMode {
  Dephase,      // zero the off-diagonal elements after each collision
  Decorrelate,  // replace the state by the product of its marginals
};

struct CollisionStep {
  std::vector<double> diagonal;  // computational-basis populations
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double gap = 0.0;  // |difference of the two middle populations|
  double qmi_value = 0.0;
};

// steps[0] is the initial state; steps[k] the state after k collisions.
struct CollisionTrajectory {
  CollisionMode mode = CollisionMode::Dephase;
  std::vector<CollisionStep> steps;
};

// One partial-swap collision: conjugate by the odd rotation with
// theta = 2 acos(sqrt(p)), then restore a diagonal state per the mode.
// The input must be diagonal (off-diagonal magnitude below 1e-10). The two
// middle populations mix as (p b + (1-p) c, (1-p) b + p c).
DensityMatrix collide_once(const DensityMatrix& sigma, double p,
                           CollisionMode mode = CollisionMode::Dephase);

// Iterates collide_once over the schedule of swap weights.
CollisionTrajectory run_collisions(const DensityMatrix& sigma0,
                                   const std::vector<double>& schedule,
                                   CollisionMode mode = CollisionMode::Dephase);

// Two-level swap in a six-level system with a degenerate-energy pair.
// Before: the spectrum laid out row-major sorted on a qubit-qutrit
// diagonal. After: populations of |01> and |10> (equal energy) exchanged.
// The swap conserves energy yet raises the mutual information whenever the
// row-sorted layout was not already pessimal, showing that collisions with
// general level structure need not step toward the minimally correlated
// arrangement.
struct CounterexampleReport {
  std::vector<double> before_diagonal;
  std::vector<double> after_diagonal;
  double qmi_before = 0.0;
  double qmi_after = 0.0;
  bool post_swap_young = false;
  bool initial_is_minimal = false;  // row-sorted layout attains the exhaustive minimum
  Pattern minimal_pattern;          // exhaustive minimizer over Young tables
  double minimal_value = 0.0;
};

// strict demands the row-sorted layout be the exhaustive minimum and
// throws otherwise, naming the actual minimal table.
CounterexampleReport qutrit_counterexample(const Spectrum& spectrum,
                                           bool strict = false);

// Inverse-temperature bookkeeping for one energy-conserving step, natural
// units (nats, k = 1). Temperatures come from the initial diagonal
// marginals; heat is the change of the A-side local energy.
struct HeatFlowReport {
  double inv_temp_a = 0.0;
  double inv_temp_b = 0.0;
  double heat_into_a = 0.0;
  double delta_qmi_nats = 0.0;
  double lhs_nats = 0.0;  // Q_A (beta_A - beta_B)
  bool holds = false;     // lhs >= delta_qmi within 1e-9
};

// rho must have diagonal marginals with populations away from 0, 1/2 and 1
// (temperatures defined); u must conserve Tr[rho H] within 1e-9.
HeatFlowReport heat_flow_check(const DensityMatrix& rho, const CMatrix& u);

struct HeatFlowSummary {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double min_slack_nats = 0.0;  // min over samples of lhs - delta_qmi
};

// Randomized audit of the inequality over energy-conserving pairs: mostly
// classical arrangements hit by odd rotations, plus work-extraction pairs
// connecting the correlated state to its same-energy final state.
HeatFlowSummary sample_heat_flow_checks(std::uint64_t n, std::uint64_t seed);

}  // namespace orbit
