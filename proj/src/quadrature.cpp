#include "revsolid/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace revsolid {

namespace {

// 15-point Kronrod abscissae on [-1, 1], positive half in decreasing order;
// the odd indices (plus the centre) form the embedded 7-point Gauss rule.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
  double a;
  double b;
  double value;  // K15 estimate
  double error;  // |K15 - G7|, conservative bound
};

Segment evaluate_segment(const std::function<double(double)>& f, double a,
                         double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(centre);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double lo = f(centre - dx);
    const double hi = f(centre + dx);
    kronrod += kKronrodWeights[i] * (lo + hi);
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * (lo + hi);
    }
  }
  if (!std::isfinite(kronrod)) {
    throw std::domain_error("integrand evaluated to a non-finite value on [" +
                            std::to_string(a) + ", " + std::to_string(b) +
                            "]");
  }
  return {a, b, kronrod * half, std::abs(kronrod - gauss) * half};
}

// Compensated (Kahan) accumulation keeps the final reduction independent of
// magnitude ordering noise.
struct Accumulator {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw std::invalid_argument("abs_tol must be positive and finite");
  }
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw std::invalid_argument("rel_tol must be positive and finite");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("max_subdivisions must be at least 1");
  }
}

QuadratureError::QuadratureError(const std::string& what, double best_estimate,
                                 double error_bound)
    : std::runtime_error(what),
      best_estimate_(best_estimate),
      error_bound_(error_bound) {}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Tolerance& tol) {
  tol.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("integration bounds must be finite");
  }
  if (a > b) {
    throw std::domain_error("integration requires a <= b");
  }
  if (a == b) {
    return 0.0;
  }

  std::vector<Segment> segments;
  segments.push_back(evaluate_segment(f, a, b));

  int subdivisions = 0;
  const double min_width =
      8.0 * std::numeric_limits<double>::epsilon() * (std::abs(a) + std::abs(b) + 1.0);

  for (;;) {
    double total = 0.0;
    double total_error = 0.0;
    std::size_t worst = segments.size();
    double worst_error = 0.0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      total += segments[i].value;
      total_error += segments[i].error;
      const bool splittable = (segments[i].b - segments[i].a) > min_width;
      if (splittable && segments[i].error > worst_error) {
        worst_error = segments[i].error;
        worst = i;
      }
    }

    const double target = std::max(tol.abs_tol, tol.rel_tol * std::abs(total));
    if (total_error <= target) {
      break;
    }
    if (worst == segments.size()) {
      // Every remaining segment is at floating-point resolution; accept the
      // estimate rather than loop forever.
      break;
    }
    if (subdivisions >= tol.max_subdivisions) {
      throw QuadratureError(
          "quadrature subdivision budget exhausted (error bound " +
              std::to_string(total_error) + ")",
          total, total_error);
    }

    const Segment seg = segments[worst];
    const double mid = 0.5 * (seg.a + seg.b);
    segments[worst] = evaluate_segment(f, seg.a, mid);
    segments.push_back(evaluate_segment(f, mid, seg.b));
    ++subdivisions;
  }

  // Deterministic reduction: left-to-right over the interval.
  std::sort(segments.begin(), segments.end(),
            [](const Segment& lhs, const Segment& rhs) { return lhs.a < rhs.a; });
  Accumulator acc;
  for (const Segment& seg : segments) {
    acc.add(seg.value);
  }
  return acc.sum;
}

double nodary_integral(double t, double beta, const Tolerance& tol) {
  if (!(t >= 0.0) || t > std::numbers::pi) {
    throw std::domain_error("nodary_integral requires t in [0, pi]");
  }
  if (!(beta >= 0.0)) {
    throw std::domain_error("nodary_integral requires beta >= 0");
  }

  const auto integrand = [beta](double s) {
    const double sn = std::sin(s);
    const double s2 = sn * sn;
    const double den = std::sqrt(beta + s2);
    return den == 0.0 ? 0.0 : s2 / den;
  };

  constexpr double half_pi = std::numbers::pi / 2.0;
  if (t <= half_pi) {
    return integrate(integrand, 0.0, t, tol);
  }
  return integrate(integrand, 0.0, half_pi, tol) +
         integrate(integrand, half_pi, t, tol);
}

double nodary_radius(double h, double beta, const Tolerance& tol) {
  if (!(h > 0.0)) {
    throw std::domain_error("nodary_radius requires h > 0");
  }
  return nodary_integral(std::numbers::pi, beta, tol) / (2.0 * h);
}

}  // namespace revsolid
