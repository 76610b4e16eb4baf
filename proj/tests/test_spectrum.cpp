#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "orbit/spectrum.hpp"
#include "orbit/threading.hpp"

using namespace orbit;

TEST_CASE("shannon entropy of the reference spectrum") {
  CHECK(shannon_entropy({0.6, 0.3, 0.1, 0.0}) ==
        doctest::Approx(1.295461844238322).epsilon(1e-12));
  CHECK(shannon_entropy({1.0, 0.0}) == doctest::Approx(0.0));
  CHECK(shannon_entropy({0.5, 0.5}) == doctest::Approx(1.0));
  CHECK(shannon_entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(shannon_entropy({0.5, -0.1, 0.6}), std::domain_error);
}

TEST_CASE("binary entropy values used across the suite") {
  CHECK(binary_entropy(0.1) == doctest::Approx(0.4689955935892812).epsilon(1e-12));
  CHECK(binary_entropy(0.3) == doctest::Approx(0.8812908992306927).epsilon(1e-12));
  CHECK(binary_entropy(0.2) == doctest::Approx(0.7219280948873623).epsilon(1e-12));
  CHECK(binary_entropy(0.45) == doctest::Approx(0.9927744539878083).epsilon(1e-12));
  CHECK(binary_entropy(0.15) == doctest::Approx(0.6098403047164004).epsilon(1e-12));
  CHECK(binary_entropy(0.4) == doctest::Approx(0.9709505944546686).epsilon(1e-12));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.3) == binary_entropy(0.7));
}

TEST_CASE("spectrum normalizes, sorts and validates") {
  const Spectrum s({1.0, 6.0, 2.0, 3.0}, 2, 2);
  CHECK(s.size() == 4);
  CHECK(s[0] == doctest::Approx(0.5));
  CHECK(s[1] == doctest::Approx(0.25));
  CHECK(s[2] == doctest::Approx(1.0 / 6));
  CHECK(s[3] == doctest::Approx(1.0 / 12));
  CHECK(s.dim_a() == 2);
  CHECK(s.dim_b() == 2);

  CHECK_THROWS_AS(Spectrum({0.5, 0.5, 0.0}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum({0.5, -0.2, 0.4, 0.3}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum({0.0, 0.0, 0.0, 0.0}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum({0.5, 0.5}, 0, 2), std::invalid_argument);

  const Spectrum clamp({0.7, 0.3, -1e-13, 0.0}, 2, 2);
  CHECK(clamp[2] == 0.0);
  CHECK(clamp[3] == 0.0);
}

TEST_CASE("simplex sampler is sorted and unbiased") {
  std::mt19937_64 rng(99);
  double mean_largest = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto v = sample_simplex(6, rng);
    REQUIRE(v.size() == 6);
    double sum = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      sum += v[k];
      if (k) CHECK(v[k - 1] >= v[k]);
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    mean_largest += v[0];
  }
  mean_largest /= n;
  // E[max] over the uniform 6-simplex is H_6 / 6 = 0.408333...
  CHECK(mean_largest == doctest::Approx(0.40833333333333327).epsilon(0.025));

  std::mt19937_64 rng2(7);
  for (int i = 0; i < 200; ++i) {
    const auto v = sample_simplex(4, rng2, true);
    CHECK(v.back() > 1e-9);
  }
}

TEST_CASE("substreams are decoupled and reproducible") {
  auto a = substream_rng(42, 0);
  auto b = substream_rng(42, 0);
  auto c = substream_rng(42, 1);
  CHECK(a() == b());
  CHECK(a() == b());
  CHECK(substream_rng(42, 0)() != c());

  // parallel_for covers the range exactly once
  std::vector<int> hits(1000, 0);
  parallel_for(1000, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) hits[static_cast<std::size_t>(i)]++;
  });
  for (int h : hits) CHECK(h == 1);
}
