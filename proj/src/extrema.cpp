#include "orbit/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace orbit {

OrbitExtremum rho_max(const Spectrum& spectrum) {
  if (spectrum.dim_a() != spectrum.dim_b())
    throw std::invalid_argument(
        "maximally correlated construction requires equal subsystem dimensions");
  const int d = spectrum.dim_a();
  CMatrix rho = CMatrix::Zero(d * d, d * d);
  Eigen::VectorXcd phi(d * d);
  // Maximally entangled basis: (I x shift^m clock^n) applied to the
  // uniform diagonal vector; weight m*d + n takes spectrum entry m*d + n.
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      phi.setZero();
      for (int k = 0; k < d; ++k) {
        const double arg = 2.0 * std::numbers::pi * n * k / d;
        phi(k * d + (k + m) % d) =
            Complex(std::cos(arg), std::sin(arg)) / std::sqrt(double(d));
      }
      rho += spectrum[static_cast<std::size_t>(m * d + n)] * (phi * phi.adjoint());
    }
  }
  const double value =
      2.0 * std::log2(double(d)) - shannon_entropy(spectrum.values());
  return {DensityMatrix(std::move(rho), d, d), value, ExtremumKind::Max};
}

OrbitExtremum rho_min(const Spectrum& spectrum, const Table& table) {
  if (table.shape().rows != spectrum.dim_a() ||
      table.shape().cols != spectrum.dim_b())
    throw std::invalid_argument("table shape must match the state dimensions");
  std::vector<double> sorted = table.values();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (int i = 0; i < spectrum.size(); ++i)
    if (std::abs(sorted[static_cast<std::size_t>(i)] - spectrum[static_cast<std::size_t>(i)]) > 1e-12)
      throw std::invalid_argument("table entries must rearrange the spectrum");
  return {DensityMatrix::diagonal(table.values(), spectrum.dim_a(), spectrum.dim_b()),
          table_mi(table), ExtremumKind::Min};
}

double delta_i(const Spectrum& spectrum) {
  if (spectrum.dim_a() != 2 || spectrum.dim_b() != 2)
    throw std::invalid_argument("closed form is defined for two-qubit spectra");
  const auto& l = spectrum.values();
  return 2.0 - binary_entropy(l[0] + l[1]) - binary_entropy(l[0] + l[2]);
}

double max_qmi_bound(int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1)
    throw std::invalid_argument("dimensions must be positive");
  return std::log2(double(dim_a) * double(dim_b));
}

}  // namespace orbit
