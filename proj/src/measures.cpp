#include "revsolid/measures.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace revsolid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Sum of per-arc integrals over the material arcs, in traversal order.
double material_sum(const ClosedProfile& profile, const Tolerance& tol,
                    const std::function<double(const DirectedArc&, double)>& f) {
  double total = 0.0;
  for (const DirectedArc& da : profile.arcs()) {
    if (da.arc.on_axis()) {
      continue;
    }
    total += integrate([&](double t) { return f(da, t); }, da.arc.t_begin(),
                       da.arc.t_end(), tol);
  }
  return total;
}

}  // namespace

double surface_area(const ClosedProfile& profile, const Tolerance& tol) {
  return kTwoPi * material_sum(profile, tol,
                               [](const DirectedArc& da, double t) {
                                 return da.arc.position(t).x() *
                                        da.arc.speed(t);
                               });
}

double surface_area(const ProfileParams& params, const Tolerance& tol) {
  return surface_area(build_closed_profile(params), tol);
}

double enclosed_volume(const ClosedProfile& profile, const Tolerance& tol) {
  double total = 0.0;
  for (const DirectedArc& da : profile.arcs()) {
    const ProfileArc& arc = da.arc;
    if (arc.on_axis()) {
      continue;  // x == 0 throughout, contributes nothing
    }
    total += double(da.direction) *
             integrate(
                 [&arc](double t) {
                   const double x = arc.position(t).x();
                   return x * x * arc.derivative(t).y();
                 },
                 arc.t_begin(), arc.t_end(), tol);
  }
  return std::abs(std::numbers::pi * total);
}

double enclosed_volume(const ProfileParams& params, const Tolerance& tol) {
  return enclosed_volume(build_closed_profile(params), tol);
}

double curvature_lp_norm(const ClosedProfile& profile, double p,
                         const Tolerance& tol) {
  if (std::isinf(p) && p > 0.0) {
    return sup_abs_H(profile);
  }
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::domain_error("curvature_lp_norm requires p > 0 or p = inf");
  }
  const double integral = material_sum(
      profile, tol, [p](const DirectedArc& da, double t) {
        const CurvatureSample s = principal_curvatures(da, t);
        return std::pow(std::abs(s.H), p) * s.x * da.arc.speed(t);
      });
  return std::pow(kTwoPi * integral, 1.0 / p);
}

double curvature_lp_norm(const ProfileParams& params, double p,
                         const Tolerance& tol) {
  return curvature_lp_norm(build_closed_profile(params), p, tol);
}

double willmore_energy(const ClosedProfile& profile, const Tolerance& tol) {
  return kTwoPi * material_sum(profile, tol,
                               [](const DirectedArc& da, double t) {
                                 const CurvatureSample s =
                                     principal_curvatures(da, t);
                                 return s.H * s.H * s.x * da.arc.speed(t);
                               });
}

double willmore_energy(const ProfileParams& params, const Tolerance& tol) {
  return willmore_energy(build_closed_profile(params), tol);
}

MeasureSet measure(const ClosedProfile& profile,
                   std::span<const double> exponents, const Tolerance& tol) {
  MeasureSet m;
  m.area = surface_area(profile, tol);
  m.volume = enclosed_volume(profile, tol);
  m.willmore = willmore_energy(profile, tol);
  m.sup_abs_H = sup_abs_H(profile);
  for (double p : exponents) {
    m.lp_norms[p] = curvature_lp_norm(profile, p, tol);
  }
  m.lp_norms[std::numeric_limits<double>::infinity()] = m.sup_abs_H;
  return m;
}

MeasureSet rescale_to_unit_volume(const MeasureSet& m) {
  if (!(m.volume > 0.0)) {
    throw std::domain_error("rescale_to_unit_volume requires volume > 0");
  }
  const double lambda = std::pow(m.volume, -1.0 / 3.0);
  MeasureSet out;
  out.area = m.area * lambda * lambda;
  out.volume = 1.0;
  out.willmore = m.willmore;
  out.sup_abs_H = m.sup_abs_H / lambda;
  for (const auto& [p, value] : m.lp_norms) {
    if (std::isinf(p)) {
      out.lp_norms[p] = value / lambda;
    } else {
      out.lp_norms[p] = value * std::pow(lambda, 2.0 / p - 1.0);
    }
  }
  return out;
}

double ball_reference(double p) {
  constexpr double four_pi = 4.0 * std::numbers::pi;
  const double unit_ratio = four_pi / 3.0;  // (r*)^-3 for the volume-1 ball
  if (std::isinf(p) && p > 0.0) {
    return std::cbrt(unit_ratio);
  }
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::domain_error("ball_reference requires p >= 1 or p = inf");
  }
  return std::pow(four_pi * std::pow(unit_ratio, (p - 2.0) / 3.0), 1.0 / p);
}

}  // namespace revsolid
