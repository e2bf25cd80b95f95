#pragma once

#include <vector>

#include "revsolid/measures.hpp"
#include "revsolid/profile.hpp"

namespace revsolid {

/// One inequality of a certificate: measured value against its threshold.
struct CertClause {
  double measured;
  double threshold;
  bool pass;
};

/// One row of the beta-shrinking walk.
struct CertIterate {
  double beta;
  double R;
  double area;
  double volume;
  double sup_abs_H;
  bool pass;
};

/// Numerical certificate that a profile instance satisfies the three
/// bounded-curvature / near-limit-area / small-volume clauses:
///   sup |H| <= 1 + cert_tol,  |area - 8 pi| <= epsilon,  volume <= epsilon.
struct TheoremCertificate {
  double epsilon = 0.0;
  ProfileParams params;  // first passing iterate (last tried on failure)
  double sup_abs_H = 0.0;
  double area = 0.0;
  double volume = 0.0;
  CertClause sup_clause{};
  CertClause area_clause{};
  CertClause volume_clause{};
  bool pass = false;
  double cert_tol = 0.0;
  Tolerance quad_tol;
  int iterations = 0;
  std::vector<CertIterate> trajectory;
};

/// Certificate that the unit-volume rescaling beats the unit-volume ball in
/// L^p curvature norm: lhs < rhs strictly, where rhs = ball_reference(p).
/// majorant bounds the certified quantity a priori: for finite p it bounds
/// lhs^p by (8 pi + eps) * eps^((p-2)/3); for p = inf it bounds lhs by
/// eps^(1/3).
struct CorollaryCertificate {
  double p = 0.0;  // INFINITY for the sup norm
  double epsilon = 0.0;
  TheoremCertificate theorem;
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_pow_p = 0.0;  // lhs^p for finite p, lhs itself for p = inf
  double majorant = 0.0;
  bool majorant_ok = false;
  bool pass = false;
  std::vector<double> epsilons_tried;
};

/// One row of the small-beta asymptotics sweep at fixed h.
struct SweepRow {
  double beta;
  double R;
  double area;
  double volume;
  double sup_abs_H;
  double inf_H;
};

/// Log-log least-squares orders of the deviations |R - 1/h|,
/// |area - 8 pi / h^2|, volume, and |sup|H| - h| against beta, plus simple
/// first-to-last improvement flags. An order is NaN when fewer than two rows
/// have a deviation above noise floor (the curvature deviation hits exact
/// zero once the envelope is attained on the constant-H arc).
struct SweepFit {
  double order_R;
  double order_area;
  double order_volume;
  double order_sup;
  bool improved_R;
  bool improved_area;
  bool improved_volume;
  bool improved_sup;
};

struct SweepResult {
  double h;
  std::vector<SweepRow> rows;
  SweepFit fit;
};

/// Geometric mean of the admissible interval (sqrt(8 pi / (eps + 8 pi)), 1):
/// h = (8 pi / (eps + 8 pi))^(1/4). Requires eps > 0.
double select_h(double epsilon);

/// Walks beta_k = 0.5 * shrink^k at h = select_h(epsilon) until all three
/// clauses hold, up to max_iters instances. Never throws on clause failure:
/// a certificate with pass == false and the full trajectory comes back
/// instead. cert_tol (the slack on sup |H| <= 1) is fixed at 1e-9.
TheoremCertificate certify_theorem(double epsilon, double beta_shrink = 0.25,
                                   int max_iters = 60,
                                   const Tolerance& tol = {});

/// Epsilon schedule for the corollary search: geometric, ratio 0.3, from 1.
std::vector<double> default_epsilon_schedule();

/// Tries the schedule entries in order and returns at the first epsilon
/// whose theorem instance yields lhs < ball_reference(p). Requires p > 2
/// (finite or INFINITY): at p = 2 the round sphere is the strict minimizer
/// of the Willmore energy, so no shape can pass (std::domain_error).
CorollaryCertificate certify_corollary(
    double p, const std::vector<double>& epsilon_schedule = {},
    const Tolerance& tol = {});

/// Measures one row per beta (strictly decreasing, all positive) at fixed h
/// and fits the convergence orders.
SweepResult asymptotics_sweep(double h, const std::vector<double>& betas,
                              const Tolerance& tol = {});

}  // namespace revsolid
