// Independent numerical oracles used only by the tests. These deliberately
// share no code with the library: Simpson's rule on a fixed fine grid checks
// the adaptive quadrature, a truncated binomial series checks the oracle
// itself on its convergence domain, and a spherical profile gives closed-form
// area / volume / curvature values.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "revsolid/profile.hpp"

namespace oracle {

// Composite Simpson with Kahan-compensated accumulation; `intervals` must be
// even. At 2^20 intervals the naive sum's rounding noise (~1e-10) would
// swamp the truncation error, hence the compensation.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int intervals) {
  const double dx = (b - a) / intervals;
  double sum = 0.0, carry = 0.0;
  const auto add = [&sum, &carry](double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  };
  add(f(a));
  add(f(b));
  for (int i = 1; i < intervals; ++i) {
    add((i % 2 == 1 ? 4.0 : 2.0) * f(a + i * dx));
  }
  return sum * dx / 3.0;
}

inline double nodary_integrand(double s, double beta) {
  const double sn = std::sin(s);
  const double s2 = sn * sn;
  const double den = std::sqrt(beta + s2);
  return den == 0.0 ? 0.0 : s2 / den;
}

// F(t; beta) by Simpson on a fixed fine grid.
inline double nodary_F(double t, double beta, int intervals = 1 << 20) {
  if (t == 0.0) {
    return 0.0;
  }
  return simpson([beta](double s) { return nodary_integrand(s, beta); }, 0.0,
                 t, intervals);
}

// Four-term binomial expansion of 1/sqrt(beta + sin^2 s) in powers of
// sin^2(s)/beta, integrated term by term over [0, pi] with Wallis values:
// integral of sin^(2k) = pi * (2k-1)!! / (2k)!!. Converges for beta > 1;
// at beta = 4 the truncation error is about 3.4e-4.
inline double nodary_F_series4(double beta) {
  const double pi = std::numbers::pi;
  const double w2 = pi / 2.0;                 // integral sin^2
  const double w4 = pi * 3.0 / 8.0;           // integral sin^4
  const double w6 = pi * 15.0 / 48.0;         // integral sin^6
  const double w8 = pi * 105.0 / 384.0;       // integral sin^8
  const double inv = 1.0 / beta;
  return (w2 - 0.5 * w4 * inv + 0.375 * w6 * inv * inv -
          0.3125 * w8 * inv * inv * inv) /
         std::sqrt(beta);
}

// A sphere of radius r about the origin: semicircular material arc plus the
// closing axis segment. Closed forms: area 4 pi r^2, volume 4/3 pi r^3,
// H = 1/r everywhere (average convention).
inline revsolid::ClosedProfile sphere_profile(double r) {
  using namespace revsolid;
  const double half_pi = std::numbers::pi / 2.0;
  std::vector<DirectedArc> arcs;
  arcs.push_back(
      {ProfileArc(ArcId::Gamma2, -half_pi, half_pi,
                  CircularForm{Vec2{0.0, 0.0}, r}),
       +1});
  arcs.push_back({ProfileArc(ArcId::AxisSegment, 0.0, 1.0,
                             SegmentForm{Vec2{0.0, r}, Vec2{0.0, -r}}),
                  +1});
  return ClosedProfile(std::move(arcs), 1e-10);
}

// Least-squares slope of log(err) against log(scale).
inline double fit_order(const std::vector<double>& scales,
                        const std::vector<double>& errs) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const int n = static_cast<int>(scales.size());
  for (int i = 0; i < n; ++i) {
    const double x = std::log(scales[i]);
    const double y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
