#include "revsolid/curvature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"

using namespace revsolid;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kGridH{0.5, 1.0, 2.0};
const std::vector<double> kGridBeta{1e-3, 0.1, 0.5, 1.0};

// Closed-form extrema of H on the cap arcs, attained at their equators.
double outer_cap_max_H(const ProfileParams& p) {
  const double sb = std::sqrt(p.beta);
  return p.h * (1.0 - sb / (4.0 + 2.0 * sb));
}

double inner_cap_min_H(const ProfileParams& p) {
  const double sb = std::sqrt(p.beta);
  return -(1.0 / p.R) * (1.0 - sb / (4.0 * p.h * p.R + 2.0 * sb));
}

}  // namespace

TEST_CASE("the nodary arc has constant mean curvature h") {
  for (double h : kGridH) {
    for (double beta : kGridBeta) {
      const ClosedProfile profile =
          build_closed_profile(ProfileParams::make(h, beta));
      const DirectedArc& g1 = profile.directed(ArcId::Gamma1);
      double worst = 0.0;
      const int n = 2000;
      for (int i = 1; i < n; ++i) {
        const double t = kPi * i / n;
        worst = std::max(worst,
                         std::abs(principal_curvatures(g1, t).H - h));
      }
      CHECK(worst <= 1e-9);
    }
  }
}

TEST_CASE("flat rims have identically zero curvature") {
  const ClosedProfile profile =
      build_closed_profile(ProfileParams::make(1.0, 0.5));
  for (ArcId id : {ArcId::Gamma4, ArcId::Gamma5}) {
    const DirectedArc& da = profile.directed(id);
    for (int i = 1; i < 50; ++i) {
      const CurvatureSample s = principal_curvatures(da, i / 50.0);
      CHECK(s.k_meridian == 0.0);
      CHECK(s.k_parallel == 0.0);
      CHECK(s.H == 0.0);
    }
  }
}

TEST_CASE("outer cap: H peaks at the equator with the closed-form value") {
  // h = 1, beta = 4: H(0) = 1 * (1 - 2/(4+4)) = 0.75.
  const ProfileParams p = ProfileParams::make(1.0, 4.0);
  const CurvatureSample equator = principal_curvatures(p, ArcId::Gamma2, 0.0);
  CHECK(equator.H == doctest::Approx(0.75).epsilon(1e-12));

  for (double h : kGridH) {
    for (double beta : kGridBeta) {
      const ProfileParams q = ProfileParams::make(h, beta);
      const ClosedProfile profile = build_closed_profile(q);
      const DirectedArc& g2 = profile.directed(ArcId::Gamma2);
      const double bound = outer_cap_max_H(q);
      for (int i = 1; i < 200; ++i) {
        const double t = -kPi / 2.0 + kPi * i / 200.0;
        const double H = principal_curvatures(g2, t).H;
        CHECK(H > 0.0);
        CHECK(H <= bound + 1e-9);
      }
      const ArcCurvatureSummary s = arc_summary(g2);
      CHECK(s.H_max == doctest::Approx(bound).epsilon(1e-9));
      CHECK(std::abs(s.t_at_max) <= 1e-5);  // equator
    }
  }
}

TEST_CASE("inner cap: H is negative and bounded by the closed form") {
  for (double h : kGridH) {
    for (double beta : kGridBeta) {
      const ProfileParams p = ProfileParams::make(h, beta);
      const ClosedProfile profile = build_closed_profile(p);
      const DirectedArc& g3 = profile.directed(ArcId::Gamma3);
      const double bound = inner_cap_min_H(p);
      for (int i = 1; i < 200; ++i) {
        const double t = -kPi / 2.0 + kPi * i / 200.0;
        const double H = principal_curvatures(g3, t).H;
        CHECK(H < 0.0);
        CHECK(H >= bound - 1e-9);
      }
      const ArcCurvatureSummary s = arc_summary(g3);
      CHECK(s.H_min == doctest::Approx(bound).epsilon(1e-9));
      CHECK(std::abs(s.t_at_min) <= 1e-5);
    }
  }
}

TEST_CASE("every sample lies in the global band [-1/R, h]") {
  for (double h : kGridH) {
    for (double beta : kGridBeta) {
      const ProfileParams p = ProfileParams::make(h, beta);
      const ClosedProfile profile = build_closed_profile(p);
      const CurvatureBand band = curvature_band(profile);
      CHECK(band.sup_H <= p.h + 1e-9);
      CHECK(band.inf_H >= -1.0 / p.R - 1e-9);
      // The upper envelope is attained on the constant-H arc.
      CHECK(band.sup_H == doctest::Approx(p.h).epsilon(1e-9));
    }
  }
}

TEST_CASE("sup |H| values frozen against the closed forms") {
  // For these parameters the inner cap dominates: sup|H| = |min H on g3|.
  const ProfileParams p1 = ProfileParams::make(1.0, 0.5);
  CHECK(sup_abs_H(p1) == doctest::Approx(1.165368457).epsilon(1e-8));
  CHECK(sup_abs_H(p1) ==
        doctest::Approx(-inner_cap_min_H(p1)).epsilon(1e-9));

  const ProfileParams p2 = ProfileParams::make(1.0, 4.0);
  CHECK(sup_abs_H(p2) == doctest::Approx(1.753410184).epsilon(1e-8));

  // Dilation covariance: doubling h exactly doubles the envelope.
  const ProfileParams p3 = ProfileParams::make(2.0, 0.5);
  CHECK(sup_abs_H(p3) == doctest::Approx(2.0 * sup_abs_H(p1)).epsilon(1e-12));
}

TEST_CASE("sup |H| tends to h as beta shrinks") {
  const double values[] = {0.1, 0.01, 0.001};
  double previous_gap = 1e9;
  for (double beta : values) {
    const double sup = sup_abs_H(ProfileParams::make(1.0, beta));
    const double gap = std::abs(sup - 1.0);
    // Below beta ~ 1e-2 the gap is pure evaluation noise (O(eps/beta) from
    // the parametric H formula), so monotonicity only holds to that floor.
    CHECK(gap < previous_gap + 1e-10);
    previous_gap = gap;
  }
  CHECK(previous_gap <= 1e-9);  // by beta = 1e-3 the envelope sits at h
}

TEST_CASE("curvature scales like 1/length under dilation") {
  const ProfileParams base = ProfileParams::make(1.0, 0.5);
  for (double lambda : {0.5, 2.0}) {
    const ProfileParams scaled = ProfileParams::make(1.0 / lambda, 0.5);
    // Angles inside the outer cap's arc, which ends where it meets the axis
    // at cos t = -sqrt(beta)/2 (t ~ 1.93 for beta = 0.5).
    for (double t : {0.3, 1.0, 1.8}) {
      const double H_base = principal_curvatures(base, ArcId::Gamma2, t).H;
      const double H_scaled =
          principal_curvatures(scaled, ArcId::Gamma2, t).H;
      CHECK(H_scaled * lambda == doctest::Approx(H_base).epsilon(1e-12));
    }
  }
}

TEST_CASE("curvature rejects the axis segment and axis-crossing tangents") {
  const ClosedProfile profile =
      build_closed_profile(ProfileParams::make(1.0, 0.5));
  CHECK_THROWS_AS(principal_curvatures(profile, ArcId::AxisSegment, 0.5),
                  std::domain_error);

  // A vertical segment on the axis with a material id: parallel curvature
  // has no continuous extension there.
  const DirectedArc vertical{
      ProfileArc(ArcId::Gamma4, 0.0, 1.0,
                 SegmentForm{Vec2{0.0, 0.0}, Vec2{0.0, 1.0}}),
      +1};
  CHECK_THROWS_AS(principal_curvatures(vertical, 0.5), std::domain_error);
}

TEST_CASE("sphere fixture has H = 1/r everywhere") {
  for (double r : {1.0, 2.5}) {
    const ClosedProfile sphere = oracle::sphere_profile(r);
    const DirectedArc& cap = sphere.directed(ArcId::Gamma2);
    for (int i = 1; i < 100; ++i) {
      const double t = -kPi / 2.0 + kPi * i / 100.0;
      const CurvatureSample s = principal_curvatures(cap, t);
      CHECK(s.k_meridian == doctest::Approx(1.0 / r).epsilon(1e-12));
      CHECK(s.k_parallel == doctest::Approx(1.0 / r).epsilon(1e-12));
      CHECK(s.H == doctest::Approx(1.0 / r).epsilon(1e-12));
    }
  }
}
