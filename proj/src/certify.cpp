#include "revsolid/certify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "revsolid/curvature.hpp"

namespace revsolid {

namespace {

constexpr double kEightPi = 8.0 * std::numbers::pi;
constexpr double kCertTol = 1e-9;
constexpr double kMajorantSlack = 1e-6;

// Least-squares slope of log(err) against log(beta), skipping rows whose
// deviation has hit the noise floor. NaN when fewer than two rows remain.
double fit_order(const std::vector<double>& betas,
                 const std::vector<double>& errs) {
  constexpr double floor = 1e-14;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (errs[i] <= floor) {
      continue;
    }
    const double x = std::log(betas[i]);
    const double y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

double select_h(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw std::domain_error("select_h requires epsilon > 0");
  }
  return std::pow(kEightPi / (epsilon + kEightPi), 0.25);
}

TheoremCertificate certify_theorem(double epsilon, double beta_shrink,
                                   int max_iters, const Tolerance& tol) {
  if (!(epsilon > 0.0)) {
    throw std::domain_error("certify_theorem requires epsilon > 0");
  }
  if (!(beta_shrink > 0.0 && beta_shrink < 1.0)) {
    throw std::invalid_argument("beta_shrink must lie in (0, 1)");
  }
  if (max_iters < 1) {
    throw std::invalid_argument("max_iters must be at least 1");
  }

  const double h = select_h(epsilon);

  TheoremCertificate cert;
  cert.epsilon = epsilon;
  cert.cert_tol = kCertTol;
  cert.quad_tol = tol;

  double beta = 0.5;
  for (int k = 0; k < max_iters; ++k, beta *= beta_shrink) {
    const ProfileParams params = ProfileParams::make(h, beta, tol);
    const ClosedProfile profile = build_closed_profile(params);

    CertIterate row;
    row.beta = beta;
    row.R = params.R;
    row.area = surface_area(profile, tol);
    row.volume = enclosed_volume(profile, tol);
    row.sup_abs_H = sup_abs_H(profile);

    const CertClause sup{row.sup_abs_H, 1.0 + kCertTol,
                         row.sup_abs_H <= 1.0 + kCertTol};
    const CertClause area{std::abs(row.area - kEightPi), epsilon,
                          std::abs(row.area - kEightPi) <= epsilon};
    const CertClause volume{row.volume, epsilon, row.volume <= epsilon};
    row.pass = sup.pass && area.pass && volume.pass;

    cert.trajectory.push_back(row);
    cert.iterations = k + 1;
    cert.params = params;
    cert.sup_abs_H = row.sup_abs_H;
    cert.area = row.area;
    cert.volume = row.volume;
    cert.sup_clause = sup;
    cert.area_clause = area;
    cert.volume_clause = volume;

    if (row.pass) {
      cert.pass = true;
      return cert;
    }
  }
  cert.pass = false;
  return cert;
}

std::vector<double> default_epsilon_schedule() {
  std::vector<double> schedule;
  double eps = 1.0;
  for (int i = 0; i < 8; ++i, eps *= 0.3) {
    schedule.push_back(eps);
  }
  return schedule;
}

CorollaryCertificate certify_corollary(double p,
                                       const std::vector<double>& epsilon_schedule,
                                       const Tolerance& tol) {
  const bool p_is_inf = std::isinf(p) && p > 0.0;
  if (!p_is_inf && !(p > 2.0 && std::isfinite(p))) {
    throw std::domain_error(
        "certify_corollary requires p > 2: at p = 2 the comparison value is "
        "the Willmore energy, which the round sphere minimizes");
  }

  const std::vector<double> schedule =
      epsilon_schedule.empty() ? default_epsilon_schedule() : epsilon_schedule;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0) ||
        (i > 0 && !(schedule[i] < schedule[i - 1]))) {
      throw std::invalid_argument(
          "epsilon schedule must be positive and strictly decreasing");
    }
  }

  CorollaryCertificate cert;
  cert.p = p;
  cert.rhs = ball_reference(p);

  for (double eps : schedule) {
    cert.epsilons_tried.push_back(eps);
    cert.epsilon = eps;
    cert.theorem = certify_theorem(eps, 0.25, 60, tol);
    if (!cert.theorem.pass) {
      continue;
    }

    const ClosedProfile profile = build_closed_profile(cert.theorem.params);
    const double volume = cert.theorem.volume;
    const double lambda = std::pow(volume, -1.0 / 3.0);

    if (p_is_inf) {
      cert.lhs = cert.theorem.sup_abs_H / lambda;
      cert.lhs_pow_p = cert.lhs;
      cert.majorant = std::cbrt(eps);
      cert.majorant_ok = cert.lhs <= cert.majorant + kMajorantSlack;
    } else {
      const double lp = curvature_lp_norm(profile, p, tol);
      cert.lhs = lp * std::pow(lambda, 2.0 / p - 1.0);
      cert.lhs_pow_p = std::pow(cert.lhs, p);
      cert.majorant = (kEightPi + eps) * std::pow(eps, (p - 2.0) / 3.0);
      cert.majorant_ok = cert.lhs_pow_p <= cert.majorant + kMajorantSlack;
    }

    if (cert.lhs < cert.rhs) {
      cert.pass = true;
      return cert;
    }
  }
  cert.pass = false;
  return cert;
}

SweepResult asymptotics_sweep(double h, const std::vector<double>& betas,
                              const Tolerance& tol) {
  if (!(h > 0.0)) {
    throw std::domain_error("asymptotics_sweep requires h > 0");
  }
  if (betas.empty()) {
    throw std::invalid_argument("asymptotics_sweep needs at least one beta");
  }
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0) || (i > 0 && !(betas[i] < betas[i - 1]))) {
      throw std::invalid_argument(
          "betas must be positive and strictly decreasing");
    }
  }

  SweepResult result;
  result.h = h;

  std::vector<double> err_R, err_area, err_volume, err_sup;
  for (double beta : betas) {
    const ProfileParams params = ProfileParams::make(h, beta, tol);
    const ClosedProfile profile = build_closed_profile(params);
    const CurvatureBand band = curvature_band(profile);

    SweepRow row;
    row.beta = beta;
    row.R = params.R;
    row.area = surface_area(profile, tol);
    row.volume = enclosed_volume(profile, tol);
    row.sup_abs_H = band.sup_abs_H;
    row.inf_H = band.inf_H;
    result.rows.push_back(row);

    err_R.push_back(std::abs(row.R - 1.0 / h));
    err_area.push_back(std::abs(row.area - kEightPi / (h * h)));
    err_volume.push_back(row.volume);
    err_sup.push_back(std::abs(row.sup_abs_H - h));
  }

  result.fit.order_R = fit_order(betas, err_R);
  result.fit.order_area = fit_order(betas, err_area);
  result.fit.order_volume = fit_order(betas, err_volume);
  result.fit.order_sup = fit_order(betas, err_sup);
  result.fit.improved_R = err_R.back() <= err_R.front();
  result.fit.improved_area = err_area.back() <= err_area.front();
  result.fit.improved_volume = err_volume.back() <= err_volume.front();
  result.fit.improved_sup = err_sup.back() <= err_sup.front();
  return result;
}

}  // namespace revsolid
