#pragma once

#include <map>
#include <span>

#include "revsolid/curvature.hpp"
#include "revsolid/profile.hpp"

namespace revsolid {

/// Geometric measures of one surface of revolution. lp_norms maps exponent
/// to ||H||_{L^p(surface)}; the key INFINITY holds the sup norm.
struct MeasureSet {
  double area = 0.0;
  double volume = 0.0;
  double willmore = 0.0;  // integral of H^2 over the surface
  double sup_abs_H = 0.0;
  std::map<double, double> lp_norms;
};

/// Lateral area by Pappus: 2*pi * sum over material arcs of
/// integral x(t) |gamma'(t)| dt.
double surface_area(const ClosedProfile& profile, const Tolerance& tol = {});
double surface_area(const ProfileParams& params, const Tolerance& tol = {});

/// Volume enclosed by the revolved loop: pi * |sum over arcs of
/// direction * integral x^2 y' dt|. The axis segment contributes zero.
double enclosed_volume(const ClosedProfile& profile, const Tolerance& tol = {});
double enclosed_volume(const ProfileParams& params, const Tolerance& tol = {});

/// ||H||_{L^p} over the surface; p = INFINITY gives the sup norm, finite p
/// must be positive (std::domain_error otherwise). Note the norm is only a
/// norm for p >= 1; smaller positive p is accepted and computed literally.
double curvature_lp_norm(const ClosedProfile& profile, double p,
                         const Tolerance& tol = {});
double curvature_lp_norm(const ProfileParams& params, double p,
                         const Tolerance& tol = {});

/// integral of H^2 over the surface (== curvature_lp_norm(., 2)^2, computed
/// directly). Invariant under dilation.
double willmore_energy(const ClosedProfile& profile, const Tolerance& tol = {});
double willmore_energy(const ProfileParams& params, const Tolerance& tol = {});

/// All measures at once; lp_norms gets one entry per requested exponent plus
/// the INFINITY entry.
MeasureSet measure(const ClosedProfile& profile,
                   std::span<const double> exponents,
                   const Tolerance& tol = {});

/// Exact scaling to volume 1 (dilation by lambda = volume^(-1/3)):
/// area -> area * lambda^2, ||H||_p -> ||H||_p * lambda^(2/p - 1),
/// sup|H| -> sup|H| / lambda, willmore unchanged.
MeasureSet rescale_to_unit_volume(const MeasureSet& m);

/// ||H||_{L^p} of the ball of volume one: [4*pi * (4*pi/3)^((p-2)/3)]^(1/p)
/// for finite p >= 1, and (4*pi/3)^(1/3) for p = INFINITY.
double ball_reference(double p);

}  // namespace revsolid
