#pragma once

#include "revsolid/profile.hpp"

namespace revsolid {

/// Signed curvature data of the surface of revolution at one profile point,
/// oriented by the outward normal of the enclosed solid. H uses the average
/// convention: H = (k_meridian + k_parallel) / 2, so the unit sphere has
/// H = 1.
struct CurvatureSample {
  ArcId arc;
  double t;
  double x;  // distance from the rotation axis
  double k_meridian;
  double k_parallel;
  double H;
};

/// Extrema of H along one arc, located by a dense scan refined with
/// golden-section search.
struct ArcCurvatureSummary {
  ArcId arc;
  double H_min;
  double H_max;
  double t_at_min;
  double t_at_max;
};

/// Envelope of H over all material arcs of a profile.
struct CurvatureBand {
  double inf_H;
  double sup_H;
  double sup_abs_H;
};

/// Curvatures at arc parameter t. The traversal direction of `da` fixes the
/// sign (outward normal). Throws std::domain_error on the axis segment, and
/// at x = 0 unless the tangent there is horizontal (where the parallel
/// curvature extends continuously by 0).
CurvatureSample principal_curvatures(const DirectedArc& da, double t);
CurvatureSample principal_curvatures(const ClosedProfile& profile, ArcId id,
                                     double t);
CurvatureSample principal_curvatures(const ProfileParams& params, ArcId id,
                                     double t);

/// Extrema of H over the closed parameter interval of one arc. The scan uses
/// n_samples points; interior extrema are then refined to parameter
/// tolerance 1e-12.
ArcCurvatureSummary arc_summary(const DirectedArc& da, int n_samples = 1024);
ArcCurvatureSummary arc_summary(const ProfileParams& params, ArcId id,
                                int n_samples = 1024);

/// Envelope over every material (non-axis) arc of the profile.
CurvatureBand curvature_band(const ClosedProfile& profile,
                             int n_samples = 1024);

double sup_abs_H(const ClosedProfile& profile);
double sup_abs_H(const ProfileParams& params);

}  // namespace revsolid
