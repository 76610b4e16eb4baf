#include "orbit/unitaries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "orbit/marginal_region.hpp"

namespace orbit {

namespace {

CMatrix plane_rotation(int i, int j, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  CMatrix u = CMatrix::Identity(4, 4);
  u(i, i) = c;
  u(i, j) = s;
  u(j, i) = -s;
  u(j, j) = c;
  return u;
}

}  // namespace

CMatrix u_odd(double theta) { return plane_rotation(1, 2, theta); }
CMatrix u_even(double phi) { return plane_rotation(0, 3, phi); }
CMatrix u_tilde(double xi) { return plane_rotation(0, 1, xi); }

CMatrix two_qubit_hamiltonian() {
  CMatrix h = CMatrix::Zero(4, 4);
  h(1, 1) = 1.0;
  h(2, 2) = 1.0;
  h(3, 3) = 2.0;
  return h;
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const CMatrix residual =
      u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols());
  return residual.cwiseAbs().maxCoeff() <= tol;
}

CMatrix haar_unitary(int d, std::mt19937_64& rng) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  const Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    const Complex phase = mag > 1e-300 ? rjj / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

SweepTrace sweep(const DensityMatrix& rho0, SweepFamily family, int n_steps) {
  if (rho0.dim_a() != 2 || rho0.dim_b() != 2)
    throw std::invalid_argument("orbit sweeps are defined for two-qubit states");
  if (n_steps < 1) throw std::invalid_argument("sweep needs at least one step");
  auto make = [&](double angle) {
    switch (family) {
      case SweepFamily::Odd: return u_odd(angle);
      case SweepFamily::Even: return u_even(angle);
      default: return u_tilde(angle);
    }
  };
  SweepTrace trace;
  trace.angles.reserve(static_cast<std::size_t>(n_steps));
  trace.points.reserve(static_cast<std::size_t>(n_steps));
  trace.populations.reserve(static_cast<std::size_t>(n_steps));
  trace.qmi_values.reserve(static_cast<std::size_t>(n_steps));
  for (int k = 0; k < n_steps; ++k) {
    const double angle =
        n_steps == 1 ? 0.0 : std::numbers::pi * k / (n_steps - 1);
    const DensityMatrix rho = conjugate(rho0, make(angle));
    const DensityMatrix ra = partial_trace(rho, Subsystem::A);
    const DensityMatrix rb = partial_trace(rho, Subsystem::B);
    trace.angles.push_back(angle);
    trace.points.push_back(marginal_point(rho));
    trace.populations.emplace_back(ra.entries()(1, 1).real(),
                                   rb.entries()(1, 1).real());
    trace.qmi_values.push_back(qmi(rho));
  }
  return trace;
}

std::array<DensityMatrix, 3> triple_point_states(const Spectrum& spectrum) {
  if (spectrum.dim_a() != 2 || spectrum.dim_b() != 2)
    throw std::invalid_argument("triple point is defined for two-qubit spectra");
  const auto& l = spectrum.values();
  if (l[0] - l[1] <= 1e-9 || l[1] - l[2] <= 1e-9 || l[2] - l[3] <= 1e-9)
    throw std::invalid_argument(
        "triple point needs a strictly sorted spectrum; repeated eigenvalues "
        "collapse the three states");
  const XStateParams first{l[0], l[1], l[2], l[3], 0.0,
                           (l[2] - l[3]) / (l[0] - l[3])};
  const XStateParams second{l[1], l[0], l[2], l[3], 0.0,
                            (l[2] - l[3]) / (l[1] - l[3])};
  const XStateParams third{l[2], l[0], l[1], l[3], 0.0, 1.0};
  return {materialize(first), materialize(second), materialize(third)};
}

Eigen::Matrix3d t_matrix(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2)
    throw std::invalid_argument("correlation matrix is defined for two-qubit states");
  std::array<Eigen::Matrix2cd, 3> sigma;
  sigma[0] << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  sigma[1] << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  sigma[2] << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CMatrix op(4, 4);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d)
              op(a * 2 + c, b * 2 + d) = sigma[i](a, b) * sigma[j](c, d);
      t(i, j) = (rho.entries() * op).trace().real();
    }
  }
  return t;
}

MomentReport secu_moment_check(const DensityMatrix& rho, const CMatrix& h,
                               const CMatrix& u, int k_max) {
  if (k_max < 1) throw std::invalid_argument("moment order must be positive");
  if (!is_unitary(u)) throw std::invalid_argument("conjugation needs a unitary");
  const DensityMatrix rotated = conjugate(rho, u);
  MomentReport report;
  report.shifts.reserve(static_cast<std::size_t>(k_max));
  CMatrix hk = CMatrix::Identity(h.rows(), h.cols());
  for (int k = 1; k <= k_max; ++k) {
    hk = hk * h;
    const Complex before = (rho.entries() * hk).trace();
    const Complex after = (rotated.entries() * hk).trace();
    report.shifts.push_back(std::abs(after - before));
  }
  return report;
}

namespace {

struct DemonPieces {
  XStateParams rho_d;
  XStateParams gamma_d;
  double lambda_a;
  double cos_phi;
  double cos_phi_prime;
};

DemonPieces demon_pieces(const Spectrum& spectrum, double lambda_b) {
  if (spectrum.dim_a() != 2 || spectrum.dim_b() != 2)
    throw std::invalid_argument("the scenario is defined for two-qubit spectra");
  const auto& l = spectrum.values();
  if (l[0] - l[3] <= 1e-12)
    throw std::invalid_argument("uniform spectrum leaves no correlation to trade");
  if (lambda_b > 0.5 + 1e-12)
    throw std::invalid_argument("lambda_b must not exceed 1/2");
  const double lambda_a = lambda_b - (l[1] - l[2]);
  const double cos_phi = (1.0 - l[1] + l[2] - 2.0 * lambda_a) / (l[0] - l[3]);
  if (cos_phi > 1.0 + 1e-12)
    throw std::invalid_argument(
        "lambda_a must be at least l3 + l4 (requested marginals leave the "
        "compatible region)");
  if (cos_phi < -1.0 - 1e-12)
    throw std::invalid_argument(
        "lambda_a must be at most l1 + l3 (requested marginals leave the "
        "compatible region)");
  DemonPieces p;
  p.lambda_a = lambda_a;
  p.cos_phi = std::clamp(cos_phi, -1.0, 1.0);
  p.rho_d = XStateParams{l[0], l[1], l[2], l[3], 1.0, p.cos_phi};
  const double e0 = 1.0 - (l[0] - l[3]) * p.cos_phi;
  if (l[0] - l[2] <= 1e-12)
    throw std::invalid_argument("spectrum too degenerate for the final state");
  const double cos_phi_prime = (1.0 - e0) / (l[0] - l[2]);
  if (std::abs(cos_phi_prime) > 1.0 + 1e-12)
    throw std::invalid_argument(
        "target energy is unreachable by the final-state family");
  p.cos_phi_prime = std::clamp(cos_phi_prime, -1.0, 1.0);
  p.gamma_d = XStateParams{l[0], l[1], l[3], l[2], 1.0, p.cos_phi_prime};
  return p;
}

}  // namespace

DensityMatrix demon_correlated_state(const Spectrum& spectrum, double lambda_b) {
  return materialize(demon_pieces(spectrum, lambda_b).rho_d);
}

DensityMatrix demon_final_state(const Spectrum& spectrum, double lambda_b) {
  return materialize(demon_pieces(spectrum, lambda_b).gamma_d);
}

DemonReport demon_scenario(const Spectrum& spectrum, double lambda_b) {
  const DemonPieces p = demon_pieces(spectrum, lambda_b);
  const DensityMatrix rho_d = materialize(p.rho_d);
  const DensityMatrix gamma_d = materialize(p.gamma_d);

  DemonReport report;
  report.lambda_a = p.lambda_a;
  report.lambda_b = lambda_b;
  report.cos_phi = p.cos_phi;
  report.cos_phi_prime = p.cos_phi_prime;
  report.qmi_rho_d = qmi(rho_d);
  report.qmi_gamma_d = qmi(gamma_d);
  const auto [ea0, eb0] = x_state_populations(p.rho_d);
  const auto [ea1, eb1] = x_state_populations(p.gamma_d);
  report.energy_a_initial = ea0;
  report.energy_b_initial = eb0;
  report.energy_a_final = ea1;
  report.energy_b_final = eb1;

  const auto spec_gamma = state_spectrum(gamma_d);
  double residual = 0.0;
  for (int i = 0; i < spectrum.size(); ++i)
    residual = std::max(residual,
                        std::abs(spec_gamma[static_cast<std::size_t>(i)] -
                                 spectrum[static_cast<std::size_t>(i)]));
  report.spectrum_residual = residual;

  double offdiag = 0.0;
  for (const auto& state : {rho_d, gamma_d}) {
    for (auto sub : {Subsystem::A, Subsystem::B}) {
      const CMatrix m = partial_trace(state, sub).entries();
      offdiag = std::max(offdiag, std::abs(m(0, 1)));
    }
  }
  report.marginal_offdiag_residual = offdiag;
  return report;
}

std::vector<MarginalPoint> coverage_union(const Spectrum& spectrum, int steps) {
  if (spectrum.dim_a() != 2 || spectrum.dim_b() != 2)
    throw std::invalid_argument("coverage is defined for two-qubit spectra");
  if (steps < 2) throw std::invalid_argument("need at least two steps per axis");
  const auto& l = spectrum.values();
  const std::array<std::array<double, 4>, 3> arrangements = {
      std::array<double, 4>{l[0], l[1], l[2], l[3]},
      std::array<double, 4>{l[1], l[0], l[2], l[3]},
      std::array<double, 4>{l[2], l[0], l[1], l[3]}};

  std::vector<MarginalPoint> points;
  points.reserve(static_cast<std::size_t>(steps) * steps * 8);
  auto push_mirrored = [&points](MarginalPoint p) {
    points.push_back(p);
    points.push_back({p.lambda_b, p.lambda_a});
  };

  auto axis = [steps](int k) { return -1.0 + 2.0 * k / (steps - 1); };

  // Composed commuting rotations on classical arrangements have closed-form
  // populations; this is the two-angle surface per arrangement.
  for (const auto& arr : arrangements) {
    for (int i = 0; i < steps; ++i) {
      for (int j = 0; j < steps; ++j) {
        const XStateParams x{arr[0], arr[1], arr[2], arr[3], axis(i), axis(j)};
        push_mirrored(x_state_marginals(x));
      }
    }
  }

  // One materialized slice that leaves the commuting family.
  for (int i = 0; i < steps; ++i) {
    const XStateParams seed{l[0], l[1], l[2], l[3], axis(i), 1.0};
    const DensityMatrix base = materialize(seed);
    for (int j = 0; j < steps; ++j) {
      const double xi = std::numbers::pi * j / (steps - 1);
      push_mirrored(marginal_point(conjugate(base, u_tilde(xi))));
    }
  }
  return points;
}

CoverageReport check_region_coverage(const Spectrum& spectrum,
                                     int grid_per_axis, double resolution,
                                     int steps) {
  const Region region = make_region(spectrum);
  const auto cloud = coverage_union(spectrum, steps);

  // Hash the cloud into bins of the resolution size for neighbor lookups.
  const int bins = static_cast<int>(std::ceil(0.5 / resolution)) + 2;
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(bins) * bins);
  auto bin_of = [&](double v) {
    return std::clamp(static_cast<int>(v / resolution), 0, bins - 1);
  };
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const int bx = bin_of(cloud[i].lambda_a);
    const int by = bin_of(cloud[i].lambda_b);
    grid[static_cast<std::size_t>(bx) * bins + by].push_back(static_cast<int>(i));
  }

  CoverageReport report;
  for (int gi = 0; gi < grid_per_axis; ++gi) {
    for (int gj = 0; gj < grid_per_axis; ++gj) {
      const MarginalPoint p{0.5 * gi / (grid_per_axis - 1),
                            0.5 * gj / (grid_per_axis - 1)};
      if (!contains(region, p)) continue;
      ++report.grid_members;
      double best = 1e300;
      const int bx = bin_of(p.lambda_a);
      const int by = bin_of(p.lambda_b);
      for (int dx = -1; dx <= 1 && best > 0.0; ++dx) {
        for (int dy = -1; dy <= 1 && best > 0.0; ++dy) {
          const int cx = bx + dx;
          const int cy = by + dy;
          if (cx < 0 || cy < 0 || cx >= bins || cy >= bins) continue;
          for (int idx : grid[static_cast<std::size_t>(cx) * bins + cy]) {
            const double gap =
                std::max(std::abs(cloud[static_cast<std::size_t>(idx)].lambda_a - p.lambda_a),
                         std::abs(cloud[static_cast<std::size_t>(idx)].lambda_b - p.lambda_b));
            best = std::min(best, gap);
          }
        }
      }
      if (best > resolution) {
        for (const auto& q : cloud)
          best = std::min(best, std::max(std::abs(q.lambda_a - p.lambda_a),
                                         std::abs(q.lambda_b - p.lambda_b)));
        if (best > resolution) ++report.uncovered;
      }
      report.worst_gap = std::max(report.worst_gap, best);
    }
  }
  return report;
}

}  // namespace orbit
