#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "orbit/marginal_region.hpp"
#include "orbit/spectrum.hpp"

using namespace orbit;

namespace {
const Spectrum kRef({0.6, 0.3, 0.1, 0.0}, 2, 2);

bool has_vertex(const Region& r, double x, double y, double tol = 1e-9) {
  for (const auto& v : r.vertices)
    if (std::abs(v.lambda_a - x) < tol && std::abs(v.lambda_b - y) < tol)
      return true;
  return false;
}
}  // namespace

TEST_CASE("reference spectrum yields the seven-vertex region") {
  const Region r = make_region(kRef);
  REQUIRE(r.vertices.size() == 7);
  CHECK(!r.degenerate);
  CHECK(!r.hull_only);
  CHECK(has_vertex(r, 0.3, 0.1));
  CHECK(has_vertex(r, 0.4, 0.1));
  CHECK(has_vertex(r, 0.5, 0.2));
  CHECK(has_vertex(r, 0.5, 0.5));
  CHECK(has_vertex(r, 0.2, 0.5));
  CHECK(has_vertex(r, 0.1, 0.4));
  CHECK(has_vertex(r, 0.1, 0.3));

  // counter-clockwise orientation: twice the signed area is positive
  double area2 = 0.0;
  for (std::size_t i = 0; i < r.vertices.size(); ++i) {
    const auto& p = r.vertices[i];
    const auto& q = r.vertices[(i + 1) % r.vertices.size()];
    area2 += p.lambda_a * q.lambda_b - q.lambda_a * p.lambda_b;
  }
  CHECK(area2 > 0.0);
}

TEST_CASE("classical hull drops the width constraints") {
  const Region r = convex_hull_region(kRef);
  REQUIRE(r.vertices.size() == 5);
  CHECK(r.hull_only);
  CHECK(has_vertex(r, 0.3, 0.1));
  CHECK(has_vertex(r, 0.5, 0.1));
  CHECK(has_vertex(r, 0.5, 0.5));
  CHECK(has_vertex(r, 0.1, 0.5));
  CHECK(has_vertex(r, 0.1, 0.3));

  // the hull point (0.5, 0.1) violates the quantum width bound
  CHECK(!contains(make_region(kRef), {0.5, 0.1}));
  CHECK(contains(r, {0.5, 0.1}));
}

TEST_CASE("rank-deficient and degenerate spectra") {
  const Region pentagon = make_region(Spectrum({0.8, 0.2, 0.0, 0.0}, 2, 2));
  CHECK(pentagon.vertices.size() == 5);
  CHECK(!pentagon.degenerate);  // l2 = 0.2 > l3 = 0

  // l2 == l3 collapses the width bound onto the hull: a square here
  const Region square = make_region(Spectrum({0.5, 0.25, 0.25, 0.0}, 2, 2));
  CHECK(square.degenerate);
  CHECK(square.vertices.size() == 4);

  const Region triangle = make_region(Spectrum({0.5, 0.5, 0.0, 0.0}, 2, 2));
  CHECK(triangle.vertices.size() == 3);

  const Region segment = make_region(Spectrum({1.0, 0.0, 0.0, 0.0}, 2, 2));
  CHECK(segment.vertices.size() == 2);
  CHECK(has_vertex(segment, 0.0, 0.0));
  CHECK(has_vertex(segment, 0.5, 0.5));

  const Region point = make_region(Spectrum({0.25, 0.25, 0.25, 0.25}, 2, 2));
  CHECK(point.vertices.size() == 1);
  CHECK(has_vertex(point, 0.5, 0.5));
  CHECK(contains(point, {0.5, 0.5}));
  CHECK(!contains(point, {0.49, 0.5}));
}

TEST_CASE("membership matches the defining inequalities") {
  const Region r = make_region(kRef);
  CHECK(contains(r, {0.3, 0.3}));
  CHECK(contains(r, {0.3, 0.1}));   // vertex on the boundary
  CHECK(contains(r, {0.35, 0.1}));  // edge interior
  CHECK(!contains(r, {0.05, 0.3}));
  CHECK(!contains(r, {0.3, 0.05}));
  CHECK(!contains(r, {0.45, 0.1}));  // outside the width bound
  CHECK(!contains(r, {0.51, 0.3}));  // outside the half box

  const auto mv = min_vertex(kRef);
  CHECK(mv.lambda_a == doctest::Approx(0.3));  // l2 + l4
  CHECK(mv.lambda_b == doctest::Approx(0.1));  // l3 + l4
  CHECK(contains(r, mv));
}

TEST_CASE("corner vertex minimizes the marginal entropy sum over the region") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum s = sample_spectrum(2, 2, rng);
    const Region r = make_region(s);
    const auto mv = min_vertex(s);
    const double best = binary_entropy(mv.lambda_a) + binary_entropy(mv.lambda_b);
    for (double x = 0.0; x <= 0.5 + 1e-12; x += 1e-2) {
      for (double y = 0.0; y <= 0.5 + 1e-12; y += 1e-2) {
        if (!contains(r, {x, y})) continue;
        CHECK(binary_entropy(x) + binary_entropy(y) >= best - 1e-9);
      }
    }
  }
}

TEST_CASE("every region vertex pins at least two constraints") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Spectrum s = sample_spectrum(2, 2, rng);
    const auto& l = s.values();
    const Region r = make_region(s);
    const double low = l[2] + l[3];
    const double diag = l[1] + l[2] + 2 * l[3];
    const double width = std::min(l[0] - l[2], l[1] - l[3]);
    for (const auto& v : r.vertices) {
      int tight = 0;
      const double x = v.lambda_a, y = v.lambda_b;
      for (double g : {x - low, y - low, x + y - diag, 0.5 - x, 0.5 - y,
                       width - (x - y), width - (y - x), x, y})
        if (std::abs(g) < 1e-9) ++tight;
      CHECK(tight >= 2);
    }
  }
}

TEST_CASE("energy sections and their corners") {
  CHECK(energy_region_contains(make_region(kRef), {0.3, 0.3}, 0.75));
  CHECK_THROWS_AS(energy_region_contains(make_region(kRef), {0.3, 0.3}, 1.5), std::domain_error);

  const auto corners = f_line_intersections(0.75);
  REQUIRE(corners.size() == 4);
  CHECK(corners[0].lambda_a == doctest::Approx(0.5));
  CHECK(corners[0].lambda_b == doctest::Approx(0.25));
  CHECK(corners[1].lambda_a == doctest::Approx(0.25));
  CHECK(corners[1].lambda_b == doctest::Approx(0.5));
  CHECK(corners[2].lambda_a == doctest::Approx(0.75));
  CHECK(corners[2].lambda_b == doctest::Approx(0.5));
  CHECK(corners[3].lambda_a == doctest::Approx(0.5));
  CHECK(corners[3].lambda_b == doctest::Approx(0.75));

  // each corner sits on a fold axis; the first pair carries energy e, the
  // second pair the mirrored budget 2 - e
  for (double e = 0.0; e <= 1.0 + 1e-12; e += 0.05) {
    const auto cs = f_line_intersections(e);
    REQUIRE(cs.size() == 4);
    for (const auto& c : cs)
      CHECK((std::abs(c.lambda_a - 0.5) < 1e-12 ||
             std::abs(c.lambda_b - 0.5) < 1e-12));
    CHECK(cs[0].lambda_a + cs[0].lambda_b == doctest::Approx(e));
    CHECK(cs[1].lambda_a + cs[1].lambda_b == doctest::Approx(e));
    CHECK(cs[2].lambda_a + cs[2].lambda_b == doctest::Approx(2.0 - e));
    CHECK(cs[3].lambda_a + cs[3].lambda_b == doctest::Approx(2.0 - e));
  }
}

TEST_CASE("energy-constrained entropy deficit") {
  CHECK(delta_i_energy(kRef, 0.6) ==
        doctest::Approx(0.4122953056414116).epsilon(1e-12));
  // an unconstrained budget reproduces the full deficit
  CHECK(delta_i_energy(kRef, 1.0) ==
        doctest::Approx(0.6497135071800262).epsilon(1e-12));
  // budgets below the minimal-entropy vertex are rejected
  CHECK_THROWS_AS(delta_i_energy(kRef, 0.2), std::domain_error);
  CHECK_THROWS_AS(delta_i_energy(kRef, 1.2), std::domain_error);
}

TEST_CASE("orbit infimum of an observable average") {
  CHECK(trace_infimum({1.0, 1.0, 0.0, 0.0}, kRef) == doctest::Approx(0.1));
  CHECK(trace_infimum({2.0, 1.0, 1.0, 0.0}, kRef) == doctest::Approx(0.4));
}
