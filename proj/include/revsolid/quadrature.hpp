#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace revsolid {

/// Accuracy request for one-dimensional quadrature. The integrator stops
/// once its summed error estimate drops below max(abs_tol, rel_tol * |Q|).
struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 1'000'000;

  /// Throws std::invalid_argument unless both tolerances are positive and
  /// the subdivision budget is at least one interval.
  void validate() const;
};

/// Raised when the subdivision budget is exhausted before the requested
/// accuracy is met. Carries the best estimate so far and its error bound so
/// callers can decide whether the partial result is still usable.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best_estimate,
                  double error_bound);

  double best_estimate() const noexcept { return best_estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

/// Globally adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b],
/// a <= b. The segment with the largest error estimate is bisected until the
/// total estimate meets `tol`. Deterministic: the final sum runs over
/// segments ordered by left endpoint, so identical inputs give identical
/// bits. Throws std::domain_error if f evaluates to a non-finite value.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Tolerance& tol = {});

/// F(t; beta) = integral_0^t sin^2(s) / sqrt(beta + sin^2(s)) ds, t in
/// [0, pi], beta >= 0. Strictly decreasing in beta for t > 0; at beta = 0
/// the integrand degenerates to sin(s) and F(pi; 0) = 2. The interval is
/// pre-split at pi/2 (interior extremum of the integrand) before adaptive
/// subdivision.
double nodary_integral(double t, double beta, const Tolerance& tol = {});

/// R(h, beta) = F(pi; beta) / (2h): the radius of the inner semicircular
/// cap of the revolved profile. Satisfies 0 < R <= 1/h with equality only
/// at beta = 0; R -> 1/h as beta -> 0. Requires h > 0.
double nodary_radius(double h, double beta, const Tolerance& tol = {});

}  // namespace revsolid
