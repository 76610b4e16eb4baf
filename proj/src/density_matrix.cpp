#include "orbit/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orbit {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigenFloor = -1e-9;
constexpr int kMaxDim = 64;

void check_hermitian(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + " must be square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument(std::string(what) + " must be Hermitian");
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix entries, int dim_a, int dim_b)
    : entries_(std::move(entries)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a_ < 1 || dim_b_ < 1)
    throw std::invalid_argument("state dimensions must be positive");
  const long dim = static_cast<long>(dim_a_) * dim_b_;
  if (dim > kMaxDim)
    throw std::invalid_argument("total dimension is capped at 64");
  if (entries_.rows() != dim || entries_.cols() != dim)
    throw std::invalid_argument("state matrix must be dim_a * dim_b square");
  check_hermitian(entries_, "density matrix");
  if (std::abs(entries_.trace() - Complex(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenFloor)
    throw std::invalid_argument("density matrix must be positive semidefinite");
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& populations,
                                      int dim_a, int dim_b) {
  const long dim = static_cast<long>(dim_a) * dim_b;
  if (static_cast<long>(populations.size()) != dim)
    throw std::invalid_argument("population count must equal dim_a * dim_b");
  CMatrix m = CMatrix::Zero(dim, dim);
  for (long i = 0; i < dim; ++i)
    m(i, i) = populations[static_cast<std::size_t>(i)];
  return DensityMatrix(std::move(m), dim_a, dim_b);
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  check_hermitian(m, "matrix");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(static_cast<std::size_t>(ev.size()));
  for (long i = 0; i < ev.size(); ++i)
    out[static_cast<std::size_t>(i)] = ev(ev.size() - 1 - i);
  return out;
}

double von_neumann_entropy(const CMatrix& m) {
  double h = 0.0;
  for (double v : hermitian_eigenvalues(m)) {
    if (v < kEigenFloor)
      throw std::domain_error("entropy argument must be positive semidefinite");
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const CMatrix& m = rho.entries();
  if (keep == Subsystem::A) {
    CMatrix out = CMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k)
          out(i, j) += m(i * db + k, j * db + k);
    return DensityMatrix(std::move(out), da, 1);
  }
  CMatrix out = CMatrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        out(i, j) += m(k * db + i, k * db + j);
  return DensityMatrix(std::move(out), 1, db);
}

double qmi(const DensityMatrix& rho) {
  return von_neumann_entropy(partial_trace(rho, Subsystem::A).entries()) +
         von_neumann_entropy(partial_trace(rho, Subsystem::B).entries()) -
         von_neumann_entropy(rho.entries());
}

MarginalPoint marginal_point(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2)
    throw std::invalid_argument("marginal point is defined for two-qubit states");
  const auto ev_a = hermitian_eigenvalues(partial_trace(rho, Subsystem::A).entries());
  const auto ev_b = hermitian_eigenvalues(partial_trace(rho, Subsystem::B).entries());
  return {ev_a.back(), ev_b.back()};
}

double energy(const DensityMatrix& rho, const CMatrix& hamiltonian) {
  check_hermitian(hamiltonian, "observable");
  if (hamiltonian.rows() != rho.dim())
    throw std::invalid_argument("observable dimension must match the state");
  return (rho.entries() * hamiltonian).trace().real();
}

Spectrum state_spectrum(const DensityMatrix& rho) {
  auto ev = hermitian_eigenvalues(rho.entries());
  for (double& v : ev) v = std::max(v, 0.0);
  return Spectrum(std::move(ev), rho.dim_a(), rho.dim_b());
}

DensityMatrix conjugate(const DensityMatrix& rho, const CMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim())
    throw std::invalid_argument("unitary dimension must match the state");
  return DensityMatrix(u * rho.entries() * u.adjoint(), rho.dim_a(), rho.dim_b());
}

namespace {

void validate_x_params(const XStateParams& x) {
  const double sum = x.alpha + x.beta + x.gamma + x.delta;
  if (x.alpha < -1e-12 || x.beta < -1e-12 || x.gamma < -1e-12 || x.delta < -1e-12)
    throw std::invalid_argument("eigenvalue weights must be non-negative");
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("eigenvalue weights must sum to 1");
  if (std::abs(x.cos_theta) > 1.0 + 1e-12 || std::abs(x.cos_phi) > 1.0 + 1e-12)
    throw std::invalid_argument("mixing cosines must lie in [-1, 1]");
}

}  // namespace

DensityMatrix materialize(const XStateParams& x) {
  validate_x_params(x);
  const double ct = std::clamp(x.cos_theta, -1.0, 1.0);
  const double cp = std::clamp(x.cos_phi, -1.0, 1.0);
  const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
  const double sp = std::sqrt(std::max(0.0, 1.0 - cp * cp));
  const double po = x.alpha + x.delta;   // outer block weight
  const double pi = x.beta + x.gamma;    // inner block weight
  const double wo = x.alpha - x.delta;
  const double wi = x.beta - x.gamma;
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 0.5 * (po + wo * cp);
  m(3, 3) = 0.5 * (po - wo * cp);
  m(0, 3) = m(3, 0) = -0.5 * wo * sp;
  m(1, 1) = 0.5 * (pi + wi * ct);
  m(2, 2) = 0.5 * (pi - wi * ct);
  m(1, 2) = m(2, 1) = -0.5 * wi * st;
  return DensityMatrix(std::move(m), 2, 2);
}

std::pair<double, double> x_state_populations(const XStateParams& x) {
  validate_x_params(x);
  const double ct = std::clamp(x.cos_theta, -1.0, 1.0);
  const double cp = std::clamp(x.cos_phi, -1.0, 1.0);
  const double wi = (x.beta - x.gamma) * ct;
  const double wo = (x.alpha - x.delta) * cp;
  return {0.5 * (1.0 - wi - wo), 0.5 * (1.0 + wi - wo)};
}

MarginalPoint x_state_marginals(const XStateParams& x) {
  const auto [ea, eb] = x_state_populations(x);
  return {std::min(ea, 1.0 - ea), std::min(eb, 1.0 - eb)};
}

double x_state_qmi(const XStateParams& x) {
  const auto [ea, eb] = x_state_populations(x);
  return binary_entropy(ea) + binary_entropy(eb) -
         shannon_entropy({x.alpha, x.beta, x.gamma, x.delta});
}

}  // namespace orbit
