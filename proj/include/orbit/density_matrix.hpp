#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "orbit/marginal_point.hpp"
#include "orbit/spectrum.hpp"

namespace orbit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

enum class Subsystem { A, B };

// Bipartite density matrix. Basis convention is row-major: the product
// state |i_A, j_B> sits at index i_A * dim_b + j_B. Construction validates
// Hermiticity (1e-10), unit trace (1e-10) and positivity (eigenvalues
// above -1e-9). Total dimension is capped at 64.
class DensityMatrix {
 public:
  DensityMatrix(CMatrix entries, int dim_a, int dim_b);
  static DensityMatrix diagonal(const std::vector<double>& populations,
                                int dim_a, int dim_b);

  const CMatrix& entries() const { return entries_; }
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return static_cast<int>(entries_.rows()); }

 private:
  CMatrix entries_;
  int dim_a_;
  int dim_b_;
};

// Eigenvalues of a Hermitian matrix, sorted non-increasing.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

// Entropy in bits of a Hermitian PSD matrix; eigenvalues in [-1e-9, 0) are
// clamped to zero.
double von_neumann_entropy(const CMatrix& m);

// Reduced state of the kept subsystem.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// S(rho_A) + S(rho_B) - S(rho), in bits.
double qmi(const DensityMatrix& rho);

// Smaller eigenvalue of each reduced state. Two-qubit states only.
MarginalPoint marginal_point(const DensityMatrix& rho);

// Tr[rho H] for a Hermitian observable of matching dimension.
double energy(const DensityMatrix& rho, const CMatrix& hamiltonian);

// Global eigenvalues as a Spectrum (sorted, renormalized).
Spectrum state_spectrum(const DensityMatrix& rho);

// U rho U^dagger, revalidated.
DensityMatrix conjugate(const DensityMatrix& rho, const CMatrix& u);

// Two-qubit family that is diagonal apart from the two anti-diagonal
// corner pairs. Eigenvalues are exactly {alpha, beta, gamma, delta} for any
// choice of the two cosines, and both reduced states are diagonal.
struct XStateParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double cos_theta = 1.0;
  double cos_phi = 1.0;
};

DensityMatrix materialize(const XStateParams& x);

// Excited-level populations (e_A, e_B) of the two reduced states.
std::pair<double, double> x_state_populations(const XStateParams& x);

// Smaller marginal eigenvalues: min(e, 1 - e) per subsystem.
MarginalPoint x_state_marginals(const XStateParams& x);

// QMI of the materialized state, evaluated in closed form.
double x_state_qmi(const XStateParams& x);

}  // namespace orbit
