#pragma once

#include <array>
#include <random>
#include <vector>

#include "orbit/density_matrix.hpp"
#include "orbit/marginal_point.hpp"
#include "orbit/spectrum.hpp"

namespace orbit {

// Planar rotations in two-qubit product basis |00>, |01>, |10>, |11>.
// Entries use half-angle cosines: the (1,1) block is [[c, s], [-s, c]].
CMatrix u_odd(double theta);   // rotates |01>, |10>; commutes with the Hamiltonian
CMatrix u_even(double phi);    // rotates |00>, |11>; commutes with u_odd
CMatrix u_tilde(double xi);    // rotates |00>, |01>

// Number operator diag(0, 1, 1, 2): counts excited levels.
CMatrix two_qubit_hamiltonian();

bool is_unitary(const CMatrix& u, double tol = 1e-10);

// Haar-distributed d x d unitary (QR of a complex Ginibre matrix with the
// R diagonal phases folded back in).
CMatrix haar_unitary(int d, std::mt19937_64& rng);

enum class SweepFamily { Odd, Even, Tilde };

// Orbit slice under a one-parameter family: angle k*pi/(n_steps-1) for
// step k. points holds folded marginal coordinates (smaller eigenvalue per
// subsystem); populations holds the excited-level populations, which trace
// straight lines for the Odd (sum conserved) and Even (difference
// conserved) families regardless of the start state.
struct SweepTrace {
  std::vector<double> angles;
  std::vector<MarginalPoint> points;
  std::vector<std::pair<double, double>> populations;
  std::vector<double> qmi_values;
};

SweepTrace sweep(const DensityMatrix& rho0, SweepFamily family, int n_steps);

// Three distinct X-states sharing the same marginal point
// ((1 - (l3 - l4))/2 both coordinates) for a strictly sorted spectrum.
std::array<DensityMatrix, 3> triple_point_states(const Spectrum& spectrum);

// Correlation matrix t_ij = Re Tr[(sigma_i x sigma_j) rho].
Eigen::Matrix3d t_matrix(const DensityMatrix& rho);

// Observable moment shifts |Tr[rho' h^k] - Tr[rho h^k]| for k = 1..k_max
// under conjugation by u. A unitary commuting with h shifts nothing; the
// first moment alone does not certify that.
struct MomentReport {
  std::vector<double> shifts;
};

MomentReport secu_moment_check(const DensityMatrix& rho, const CMatrix& h,
                               const CMatrix& u, int k_max);

// Work-extraction scenario: correlated state rho_d with marginal
// populations (lambda_a, lambda_b), its decorrelated product rho_c, and a
// final state gamma_d on the same orbit as rho_d with the same total
// energy as rho_c, both marginals diagonal.
struct DemonReport {
  double lambda_a = 0.0;
  double lambda_b = 0.0;
  double cos_phi = 0.0;
  double cos_phi_prime = 0.0;
  double qmi_rho_d = 0.0;
  double qmi_gamma_d = 0.0;
  double energy_a_initial = 0.0;
  double energy_b_initial = 0.0;
  double energy_a_final = 0.0;
  double energy_b_final = 0.0;
  double spectrum_residual = 0.0;       // max |spec(gamma_d) - spectrum|
  double marginal_offdiag_residual = 0.0;
};

DemonReport demon_scenario(const Spectrum& spectrum, double lambda_b);

DensityMatrix demon_correlated_state(const Spectrum& spectrum, double lambda_b);
DensityMatrix demon_final_state(const Spectrum& spectrum, double lambda_b);

// Marginal points reachable by composing the two commuting rotation
// families on classical arrangements of the spectrum, a materialized
// u_tilde slice, and the coordinate-swap mirror. steps samples per angle
// axis.
std::vector<MarginalPoint> coverage_union(const Spectrum& spectrum, int steps);

struct CoverageReport {
  int grid_members = 0;   // grid points inside the region
  int uncovered = 0;      // members with no union point within resolution
  double worst_gap = 0.0; // largest Chebyshev distance to the union
};

// Chebyshev-distance coverage of the region by coverage_union on a
// grid_per_axis x grid_per_axis grid over [0, 1/2]^2.
CoverageReport check_region_coverage(const Spectrum& spectrum,
                                     int grid_per_axis, double resolution,
                                     int steps);

}  // namespace orbit
