#include "orbit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace orbit {

namespace {
constexpr double kNegativeTol = 1e-12;
}

Spectrum::Spectrum(std::vector<double> values, int dim_a, int dim_b)
    : values_(std::move(values)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a_ < 1 || dim_b_ < 1)
    throw std::invalid_argument("spectrum dimensions must be positive");
  if (values_.size() !=
      static_cast<std::size_t>(dim_a_) * static_cast<std::size_t>(dim_b_))
    throw std::invalid_argument("spectrum length must equal dim_a * dim_b");
  double sum = 0.0;
  for (double& v : values_) {
    if (v < -kNegativeTol)
      throw std::invalid_argument("spectrum entries must be non-negative");
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (sum <= 0.0)
    throw std::invalid_argument("spectrum must have positive total weight");
  for (double& v : values_) v /= sum;
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p) {
    if (v < -kNegativeTol)
      throw std::domain_error("probability entries must be non-negative");
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double binary_entropy(double x) {
  if (x < -kNegativeTol || x > 1.0 + kNegativeTol)
    throw std::domain_error("binary entropy argument outside [0, 1]");
  x = std::clamp(x, 0.0, 1.0);
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

std::vector<double> sample_simplex(int d, std::mt19937_64& rng,
                                   bool full_rank) {
  if (d < 2) throw std::invalid_argument("simplex dimension must be at least 2");
  std::exponential_distribution<double> exp_dist(1.0);
  std::vector<double> v(static_cast<std::size_t>(d));
  while (true) {
    double sum = 0.0;
    for (double& x : v) {
      x = exp_dist(rng);
      sum += x;
    }
    for (double& x : v) x /= sum;
    std::sort(v.begin(), v.end(), std::greater<>());
    if (!full_rank || v.back() > 1e-9) return v;
  }
}

Spectrum sample_spectrum(int dim_a, int dim_b, std::mt19937_64& rng,
                         bool full_rank) {
  return Spectrum(sample_simplex(dim_a * dim_b, rng, full_rank), dim_a, dim_b);
}

}  // namespace orbit
