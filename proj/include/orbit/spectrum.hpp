#pragma once

#include <cstddef>
#include <random>
#include <vector>

namespace orbit {

// Global eigenvalue vector of a bipartite state, stored sorted
// non-increasing and normalized to unit sum. Any positive scale is accepted
// on input (integer weights such as 6,5,4,3,2,1 are fine); negatives below
// -1e-12 are rejected.
class Spectrum {
 public:
  Spectrum(std::vector<double> values, int dim_a, int dim_b);

  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<double> values_;
  int dim_a_;
  int dim_b_;
};

// Shannon entropy in bits with 0 log 0 := 0. Entries in [-1e-12, 0) are
// treated as zero; anything lower is a domain error. Input is not
// normalized.
double shannon_entropy(const std::vector<double>& p);

// Entropy of the pair (x, 1-x) in bits, for x in [0, 1].
double binary_entropy(double x);

// Uniform draw from the probability simplex, returned sorted
// non-increasing. full_rank resamples until every entry exceeds 1e-9.
std::vector<double> sample_simplex(int d, std::mt19937_64& rng,
                                   bool full_rank = false);

Spectrum sample_spectrum(int dim_a, int dim_b, std::mt19937_64& rng,
                         bool full_rank = false);

}  // namespace orbit
