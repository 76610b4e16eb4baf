#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "orbit/collision.hpp"
#include "orbit/density_matrix.hpp"
#include "orbit/spectrum.hpp"
#include "orbit/tables.hpp"
#include "orbit/unitaries.hpp"

using namespace orbit;

TEST_CASE("partial swap preconditions") {
  const auto diag = DensityMatrix::diagonal({0.5, 0.1, 0.3, 0.1}, 2, 2);
  CHECK_THROWS_AS(collide_once(diag, 1.5, CollisionMode::Dephase),
                  std::invalid_argument);
  std::mt19937_64 rng(3);
  const auto rotated = conjugate(diag, haar_unitary(4, rng));
  CHECK_THROWS_AS(collide_once(rotated, 0.9, CollisionMode::Dephase),
                  std::invalid_argument);
}

TEST_CASE("population gap contracts by the swap factor") {
  const auto start = DensityMatrix::diagonal({0.5, 0.1, 0.3, 0.1}, 2, 2);
  for (double p : {0.9, 0.7, 0.55}) {
    const auto traj = run_collisions(
        start, std::vector<double>(6, p), CollisionMode::Dephase);
    REQUIRE(traj.steps.size() == 7);
    CHECK(traj.steps[0].gap == doctest::Approx(0.2).epsilon(1e-12));
    const double factor = std::abs(2 * p - 1);
    for (std::size_t k = 1; k < traj.steps.size(); ++k) {
      CHECK(traj.steps[k].gap ==
            doctest::Approx(traj.steps[k - 1].gap * factor).epsilon(1e-10));
    }
  }
  // five collisions at p = 0.9: 0.2 * 0.8^5
  const auto traj = run_collisions(
      start, std::vector<double>(5, 0.9), CollisionMode::Dephase);
  CHECK(traj.steps.back().gap ==
        doctest::Approx(0.06553600000000002).epsilon(1e-12));
}

TEST_CASE("dephasing collisions are monotone") {
  const auto start = DensityMatrix::diagonal({0.55, 0.05, 0.25, 0.15}, 2, 2);
  const auto traj = run_collisions(
      start, std::vector<double>(40, 0.85), CollisionMode::Dephase);
  for (std::size_t k = 1; k < traj.steps.size(); ++k) {
    // the population map is doubly stochastic, so global entropy rises
    CHECK(shannon_entropy(traj.steps[k].diagonal) >=
          shannon_entropy(traj.steps[k - 1].diagonal) - 1e-12);
    CHECK(traj.steps[k].gap <= traj.steps[k - 1].gap + 1e-12);
  }
  // equilibration: both marginals converge to the average population
  const auto& last = traj.steps.back();
  CHECK(std::abs(last.gap) < 1e-6);
  CHECK(last.entropy_a == doctest::Approx(last.entropy_b).epsilon(1e-6));
}

TEST_CASE("decorrelating collisions keep product form") {
  const auto start = DensityMatrix::diagonal({0.5, 0.1, 0.3, 0.1}, 2, 2);
  const auto traj = run_collisions(
      start, std::vector<double>(10, 0.9), CollisionMode::Decorrelate);
  for (std::size_t k = 1; k < traj.steps.size(); ++k)
    CHECK(traj.steps[k].qmi_value == doctest::Approx(0.0).epsilon(1e-10));
  // the same gap recursion drives both modes
  const auto deph = run_collisions(
      start, std::vector<double>(10, 0.9), CollisionMode::Dephase);
  for (std::size_t k = 0; k < traj.steps.size(); ++k)
    CHECK(traj.steps[k].gap == doctest::Approx(deph.steps[k].gap).epsilon(1e-9));

  // the product trace squares each step, so a long run amplifies any
  // rounding in the start diagonal; it must stay inside the validator
  const auto drift = DensityMatrix::diagonal({0.5, 0.3, 0.1, 0.1}, 2, 2);
  const auto long_run = run_collisions(
      drift, std::vector<double>(60, 0.9), CollisionMode::Decorrelate);
  double total = 0.0;
  for (double v : long_run.steps.back().diagonal) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("middle populations mix as a weighted average") {
  const auto start = DensityMatrix::diagonal({0.5, 0.1, 0.3, 0.1}, 2, 2);
  const double p = 0.8;
  const auto next = collide_once(start, p, CollisionMode::Dephase);
  const auto ev = next.entries().diagonal();
  CHECK(std::real(ev(0)) == doctest::Approx(0.5));
  CHECK(std::real(ev(3)) == doctest::Approx(0.1));
  CHECK(std::real(ev(1)) == doctest::Approx(p * 0.1 + (1 - p) * 0.3));
  CHECK(std::real(ev(2)) == doctest::Approx((1 - p) * 0.1 + p * 0.3));
}

TEST_CASE("six-level example where the sorted layout is not minimal") {
  const Spectrum s({6, 5, 4, 3, 2, 1}, 2, 3);
  const auto report = qutrit_counterexample(s);
  CHECK(report.qmi_before == doctest::Approx(0.00997071328598187).epsilon(1e-12));
  CHECK(report.qmi_after == doctest::Approx(0.0349630366458622).epsilon(1e-12));
  CHECK(report.qmi_after > report.qmi_before);
  CHECK(!report.initial_is_minimal);
  CHECK(report.minimal_value == doctest::Approx(0.0015754320195191518).epsilon(1e-12));
  // the swapped arrangement (6,3,4)/(5,2,1) breaks the row order
  CHECK(!report.post_swap_young);
  // the swap moved weights 5 and 3 between the rows
  CHECK(report.before_diagonal[1] == doctest::Approx(5.0 / 21));
  CHECK(report.after_diagonal[1] == doctest::Approx(3.0 / 21));
  CHECK(report.before_diagonal[3] == doctest::Approx(3.0 / 21));
  CHECK(report.after_diagonal[3] == doctest::Approx(5.0 / 21));

  CHECK_THROWS_AS(qutrit_counterexample(s, true), std::invalid_argument);
}

TEST_CASE("six-level example where the sorted layout is minimal") {
  const Spectrum s({10, 9, 8, 3, 2, 1}, 2, 3);
  const auto report = qutrit_counterexample(s);
  CHECK(report.initial_is_minimal);
  CHECK(report.minimal_value == doctest::Approx(0.011756748069121414).epsilon(1e-12));
  CHECK(report.qmi_before == doctest::Approx(report.minimal_value).epsilon(1e-12));
  // strict mode accepts this spectrum
  CHECK_NOTHROW(qutrit_counterexample(s, true));
}

TEST_CASE("heat-flow inequality on the frozen pair") {
  const auto rho = demon_correlated_state(Spectrum({0.6, 0.3, 0.1, 0.0}, 2, 2), 0.4);
  const auto gamma = demon_final_state(Spectrum({0.6, 0.3, 0.1, 0.0}, 2, 2), 0.4);

  // recover the connecting unitary from the two eigenbases
  Eigen::SelfAdjointEigenSolver<CMatrix> s1(rho.entries());
  Eigen::SelfAdjointEigenSolver<CMatrix> s2(gamma.entries());
  const CMatrix u = s2.eigenvectors() * s1.eigenvectors().adjoint();

  const auto report = heat_flow_check(rho, u);
  CHECK(report.inv_temp_a == doctest::Approx(std::log(4.0)).epsilon(1e-10));
  CHECK(report.inv_temp_b == doctest::Approx(std::log(1.5)).epsilon(1e-10));
  CHECK(report.lhs_nats ==
        doctest::Approx(-0.049041462650586336).epsilon(1e-9));
  CHECK(report.delta_qmi_nats ==
        doctest::Approx(-0.06256618902786455).epsilon(1e-9));
  CHECK(report.lhs_nats >= report.delta_qmi_nats);
  CHECK(report.holds);

  // a non-unitary or energy-shifting map is rejected
  CHECK_THROWS_AS(heat_flow_check(rho, CMatrix::Identity(4, 4) * 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(heat_flow_check(rho, u_even(1.0)), std::invalid_argument);
}

TEST_CASE("randomized heat-flow audit stays clean") {
  const auto summary = sample_heat_flow_checks(500, 77);
  CHECK(summary.samples == 500);
  CHECK(summary.violations == 0);
  CHECK(summary.min_slack_nats > -1e-9);
}
