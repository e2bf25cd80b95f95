#include "revsolid/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace revsolid {

namespace {

// Golden-section search for the maximum of f on [lo, hi], run until the
// bracket is narrower than xtol. f is assumed unimodal on the bracket; the
// bracket comes from a dense scan, so that holds in practice.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double xtol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

CurvatureSample principal_curvatures(const DirectedArc& da, double t) {
  const ProfileArc& arc = da.arc;
  if (arc.on_axis()) {
    throw std::domain_error("curvature is undefined on the axis segment");
  }

  const Vec2 p = arc.position(t);
  const Vec2 d1 = arc.derivative(t);
  const Vec2 d2 = arc.second_derivative(t);
  const double sp = arc.speed(t);
  const double sigma = double(da.direction);

  const double k_meridian =
      sigma * (d1.x() * d2.y() - d1.y() * d2.x()) / (sp * sp * sp);

  double k_parallel;
  if (p.x() > 0.0) {
    k_parallel = sigma * d1.y() / (p.x() * sp);
  } else if (d1.y() == 0.0) {
    // Flat rim meeting the axis: the parallel curvature extends by 0.
    k_parallel = 0.0;
  } else {
    throw std::domain_error(
        "parallel curvature is undefined where the profile meets the axis "
        "with a non-horizontal tangent");
  }

  return {arc.id(), t, p.x(), k_meridian, k_parallel,
          0.5 * (k_meridian + k_parallel)};
}

CurvatureSample principal_curvatures(const ClosedProfile& profile, ArcId id,
                                     double t) {
  return principal_curvatures(profile.directed(id), t);
}

CurvatureSample principal_curvatures(const ProfileParams& params, ArcId id,
                                     double t) {
  return principal_curvatures(build_closed_profile(params), id, t);
}

ArcCurvatureSummary arc_summary(const DirectedArc& da, int n_samples) {
  if (n_samples < 2) {
    throw std::invalid_argument("arc_summary needs at least two samples");
  }
  const double t0 = da.arc.t_begin();
  const double t1 = da.arc.t_end();
  const double dt = (t1 - t0) / (n_samples - 1);

  const auto H_at = [&da](double t) { return principal_curvatures(da, t).H; };

  double H_min = H_at(t0), H_max = H_min;
  int i_min = 0, i_max = 0;
  for (int i = 1; i < n_samples; ++i) {
    const double t = (i == n_samples - 1) ? t1 : t0 + i * dt;
    const double H = H_at(t);
    if (H < H_min) {
      H_min = H;
      i_min = i;
    }
    if (H > H_max) {
      H_max = H;
      i_max = i;
    }
  }

  // Refine an extremum that sits strictly inside the interval; a boundary
  // winner is already exact.
  const auto refine = [&](int i_best, double scale) {
    const double lo = std::max(t0, t0 + (i_best - 1) * dt);
    const double hi = std::min(t1, t0 + (i_best + 1) * dt);
    return golden_max([&](double t) { return scale * H_at(t); }, lo, hi,
                      1e-12);
  };

  double t_min = (i_min == 0) ? t0 : (i_min == n_samples - 1 ? t1 : refine(i_min, -1.0));
  double t_max = (i_max == 0) ? t0 : (i_max == n_samples - 1 ? t1 : refine(i_max, +1.0));
  H_min = std::min(H_min, H_at(t_min));
  H_max = std::max(H_max, H_at(t_max));

  return {da.arc.id(), H_min, H_max, t_min, t_max};
}

ArcCurvatureSummary arc_summary(const ProfileParams& params, ArcId id,
                                int n_samples) {
  return arc_summary(build_closed_profile(params).directed(id), n_samples);
}

CurvatureBand curvature_band(const ClosedProfile& profile, int n_samples) {
  bool first = true;
  CurvatureBand band{0.0, 0.0, 0.0};
  for (const DirectedArc& da : profile.arcs()) {
    if (da.arc.on_axis()) {
      continue;
    }
    const ArcCurvatureSummary s = arc_summary(da, n_samples);
    if (first) {
      band.inf_H = s.H_min;
      band.sup_H = s.H_max;
      first = false;
    } else {
      band.inf_H = std::min(band.inf_H, s.H_min);
      band.sup_H = std::max(band.sup_H, s.H_max);
    }
  }
  if (first) {
    throw std::invalid_argument("profile has no material arcs");
  }
  band.sup_abs_H = std::max(std::abs(band.inf_H), std::abs(band.sup_H));
  return band;
}

double sup_abs_H(const ClosedProfile& profile) {
  return curvature_band(profile).sup_abs_H;
}

double sup_abs_H(const ProfileParams& params) {
  return sup_abs_H(build_closed_profile(params));
}

}  // namespace revsolid
