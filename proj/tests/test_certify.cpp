#include "revsolid/certify.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <vector>

using namespace revsolid;

namespace {

constexpr double kEightPi = 8.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("select_h lands inside the admissible interval") {
  for (double eps : {0.01, 0.1, 1.0, 10.0}) {
    const double lower = std::sqrt(kEightPi / (eps + kEightPi));
    const double h = select_h(eps);
    CHECK(h > lower);
    CHECK(h < 1.0);
    // Geometric mean of the endpoints.
    CHECK(h == doctest::Approx(std::sqrt(lower)).epsilon(1e-15));
    // The limiting area 8 pi / h^2 then sits within eps of 8 pi.
    CHECK(kEightPi / (h * h) - kEightPi < eps);
  }
  // The admissible interval collapses towards (0, 1) as eps grows.
  CHECK(std::sqrt(kEightPi / (1e12 + kEightPi)) <= 1e-5);
  CHECK_THROWS_AS(select_h(0.0), std::domain_error);
  CHECK_THROWS_AS(select_h(-1.0), std::domain_error);
}

TEST_CASE("theorem certificate passes at eps = 0.1") {
  const TheoremCertificate cert = certify_theorem(0.1);
  CHECK(cert.pass);
  CHECK(cert.sup_clause.pass);
  CHECK(cert.area_clause.pass);
  CHECK(cert.volume_clause.pass);
  CHECK(cert.sup_abs_H <= 1.0 + 1e-9);
  CHECK(std::abs(cert.area - kEightPi) <= 0.1);
  CHECK(cert.volume <= 0.1);
  CHECK(cert.params.h == doctest::Approx(select_h(0.1)).epsilon(1e-15));
  // The walk halts at beta = 0.5 * 0.25^9 = 2^-19 exactly.
  CHECK(cert.iterations == 10);
  CHECK(cert.params.beta == std::ldexp(1.0, -19));
  CHECK(cert.trajectory.size() == 10);
  CHECK(cert.trajectory.back().pass);
  CHECK_FALSE(cert.trajectory.front().pass);
}

TEST_CASE("theorem certificate passes quickly for loose eps") {
  const TheoremCertificate cert = certify_theorem(10.0);
  CHECK(cert.pass);
  CHECK(cert.iterations <= 2);
}

TEST_CASE("theorem walk makes monotone progress along the trajectory") {
  const TheoremCertificate cert = certify_theorem(1.0);
  CHECK(cert.pass);
  REQUIRE(cert.trajectory.size() >= 2);
  // beta and the volume shrink strictly at every step; the curvature
  // envelope only settles under the threshold once the inner cap stops
  // dominating, so early iterates may sit above 1.
  for (std::size_t i = 1; i < cert.trajectory.size(); ++i) {
    CHECK(cert.trajectory[i].beta < cert.trajectory[i - 1].beta);
    CHECK(cert.trajectory[i].volume < cert.trajectory[i - 1].volume);
  }
  CHECK(cert.trajectory.back().sup_abs_H <= 1.0 + 1e-9);
  CHECK(cert.trajectory.back().pass);
}

TEST_CASE("theorem verdict is stable under a tighter quadrature") {
  Tolerance tight;
  tight.abs_tol = 1e-13;
  tight.rel_tol = 1e-13;
  const TheoremCertificate base = certify_theorem(1.0);
  const TheoremCertificate refined = certify_theorem(1.0, 0.25, 60, tight);
  CHECK(base.pass == refined.pass);
  CHECK(base.iterations == refined.iterations);
  CHECK(base.area == doctest::Approx(refined.area).epsilon(1e-10));
  CHECK(base.volume == doctest::Approx(refined.volume).epsilon(1e-10));
}

TEST_CASE("certification is deterministic down to the bits") {
  const TheoremCertificate a = certify_theorem(0.1);
  const TheoremCertificate b = certify_theorem(0.1);
  CHECK(std::memcmp(&a.area, &b.area, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.volume, &b.volume, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.sup_abs_H, &b.sup_abs_H, sizeof(double)) == 0);
  REQUIRE(a.trajectory.size() == b.trajectory.size());
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    CHECK(a.trajectory[i].area == b.trajectory[i].area);
    CHECK(a.trajectory[i].volume == b.trajectory[i].volume);
    CHECK(a.trajectory[i].sup_abs_H == b.trajectory[i].sup_abs_H);
  }
}

TEST_CASE("theorem rejects invalid control parameters") {
  CHECK_THROWS_AS(certify_theorem(-0.5), std::domain_error);
  CHECK_THROWS_AS(certify_theorem(0.1, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(certify_theorem(0.1, 0.25, 0), std::invalid_argument);
}

TEST_CASE("an impossible iteration budget yields a failure certificate") {
  // One instance at beta = 0.5 cannot reach eps = 0.01.
  const TheoremCertificate cert = certify_theorem(0.01, 0.25, 1);
  CHECK_FALSE(cert.pass);
  CHECK(cert.iterations == 1);
  CHECK(cert.trajectory.size() == 1);
  // The failing clauses are reported, not thrown.
  const bool both_tail_clauses_pass = cert.area_clause.pass && cert.volume_clause.pass;
  CHECK_FALSE(both_tail_clauses_pass);
}

TEST_CASE("corollary certificate at p = 3") {
  const CorollaryCertificate cert = certify_corollary(3.0);
  CHECK(cert.pass);
  CHECK(cert.lhs < cert.rhs);
  CHECK(cert.rhs == doctest::Approx(ball_reference(3.0)).epsilon(1e-15));
  CHECK(cert.majorant_ok);
  CHECK(cert.lhs_pow_p <= cert.majorant + 1e-6);
  // The first schedule entry (eps = 1) already certifies.
  CHECK(cert.epsilon == 1.0);
  CHECK(cert.epsilons_tried.size() == 1);
  CHECK(cert.theorem.pass);
}

TEST_CASE("corollary certificate at p = inf") {
  const CorollaryCertificate cert = certify_corollary(kInf);
  CHECK(cert.pass);
  CHECK(cert.lhs < cert.rhs);
  CHECK(cert.rhs == doctest::Approx(std::cbrt(4.0 * std::numbers::pi / 3.0))
                        .epsilon(1e-15));
  CHECK(cert.majorant_ok);
  // For the sup norm the majorant bounds lhs itself by eps^(1/3).
  CHECK(cert.lhs <= std::cbrt(cert.epsilon) + 1e-6);
}

TEST_CASE("corollary refuses p <= 2") {
  CHECK_THROWS_AS(certify_corollary(2.0), std::domain_error);
  CHECK_THROWS_AS(certify_corollary(1.5), std::domain_error);
  CHECK_THROWS_AS(certify_corollary(-3.0), std::domain_error);
  try {
    certify_corollary(2.0);
  } catch (const std::domain_error& e) {
    // The refusal names the obstruction.
    CHECK(std::string(e.what()).find("Willmore") != std::string::npos);
  }
}

TEST_CASE("corollary validates its epsilon schedule") {
  CHECK_THROWS_AS(certify_corollary(3.0, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(certify_corollary(3.0, {0.1, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(certify_corollary(3.0, {-1.0}), std::invalid_argument);
  CHECK(certify_corollary(3.0, {0.5, 0.1}).pass);
}

TEST_CASE("default epsilon schedule is geometric with ratio 0.3") {
  const std::vector<double> schedule = default_epsilon_schedule();
  REQUIRE(schedule.size() >= 2);
  CHECK(schedule.front() == 1.0);
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    CHECK(schedule[i] == doctest::Approx(0.3 * schedule[i - 1]).epsilon(1e-15));
  }
}

TEST_CASE("sweep rows track the small-beta limits") {
  std::vector<double> betas;
  for (int k = 1; k <= 6; ++k) {
    betas.push_back(std::pow(10.0, -k));
  }
  const SweepResult sweep = asymptotics_sweep(1.0, betas);
  REQUIRE(sweep.rows.size() == 6);

  // Deviations at the smallest beta.
  const SweepRow& last = sweep.rows.back();
  CHECK(std::abs(last.R - 1.0) <= 1e-2);
  CHECK(std::abs(last.area - kEightPi) <= 5e-2);
  CHECK(last.volume <= 5e-2);
  // The envelope is attained on the constant-H arc once the caps stop
  // dominating, but evaluating H from the parametric formula cancels two
  // O(h/beta) terms, leaving O(eps/beta) noise: ~1e-9 at beta = 1e-6.
  CHECK(std::abs(last.sup_abs_H - 1.0) <= 1e-8);

  // R and the volume improve monotonically along the sweep; the area
  // deviation and curvature envelope improve end to end.
  for (std::size_t i = 1; i < sweep.rows.size(); ++i) {
    CHECK(sweep.rows[i].R > sweep.rows[i - 1].R);
    CHECK(sweep.rows[i].volume < sweep.rows[i - 1].volume);
  }
  CHECK(sweep.fit.improved_R);
  CHECK(sweep.fit.improved_area);
  CHECK(sweep.fit.improved_volume);
  CHECK(sweep.fit.improved_sup);

  // The area deviation is dominated by a sqrt(beta) term (order 1/2); the
  // R and volume deviations carry beta*log(beta) corrections, so their
  // effective order on this range sits just below 1.
  CHECK(sweep.fit.order_area >= 0.35);
  CHECK(sweep.fit.order_area <= 0.6);
  CHECK(sweep.fit.order_R >= 0.6);
  CHECK(sweep.fit.order_R <= 1.1);
  CHECK(sweep.fit.order_volume >= 0.6);
  CHECK(sweep.fit.order_volume <= 1.1);
}

TEST_CASE("sweep validates its inputs") {
  CHECK_THROWS_AS(asymptotics_sweep(0.0, {0.1}), std::domain_error);
  CHECK_THROWS_AS(asymptotics_sweep(1.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotics_sweep(1.0, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotics_sweep(1.0, {0.1, -0.2}), std::invalid_argument);
}
