#include "revsolid/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace revsolid {

namespace {

constexpr double kPi = std::numbers::pi;

struct Evaluator {
  double t;

  // w - sin t evaluated without cancellation: w and sin t agree to O(beta)
  // near t = pi/2, but w^2 - sin^2 t = beta exactly, so the difference is
  // beta / (w + sin t) wherever sin t >= 0 (all of [0, pi]).
  static double radial_gap(double beta, double sn, double w) {
    return sn >= 0.0 ? beta / (w + sn) : w - sn;
  }

  Vec2 position(const NodaryForm& f) const {
    const double sn = std::sin(t);
    const double w = std::sqrt(f.beta + sn * sn);
    const double inv = 1.0 / (2.0 * f.h);
    return {inv * radial_gap(f.beta, sn, w),
            inv * (std::cos(t) - 1.0 + nodary_integral(t, f.beta, f.tol))};
  }
  Vec2 position(const CircularForm& f) const {
    return {f.center.x() + f.radius * std::cos(t),
            f.center.y() + f.radius * std::sin(t)};
  }
  Vec2 position(const SegmentForm& f) const {
    return f.from + t * (f.to - f.from);
  }

  Vec2 derivative(const NodaryForm& f) const {
    const double sn = std::sin(t);
    const double cs = std::cos(t);
    const double w = std::sqrt(f.beta + sn * sn);
    const double q_minus_1 = -radial_gap(f.beta, sn, w) / w;  // q = sn / w
    const double inv = 1.0 / (2.0 * f.h);
    return {inv * cs * q_minus_1, inv * sn * q_minus_1};
  }
  Vec2 derivative(const CircularForm& f) const {
    return {-f.radius * std::sin(t), f.radius * std::cos(t)};
  }
  Vec2 derivative(const SegmentForm& f) const { return f.to - f.from; }

  Vec2 second_derivative(const NodaryForm& f) const {
    const double sn = std::sin(t);
    const double cs = std::cos(t);
    const double w = std::sqrt(f.beta + sn * sn);
    const double q_minus_1 = -radial_gap(f.beta, sn, w) / w;
    const double qp = f.beta * cs / (w * w * w);  // d/dt of sn/w
    const double inv = 1.0 / (2.0 * f.h);
    return {inv * (-sn * q_minus_1 + cs * qp),
            inv * (cs * q_minus_1 + sn * qp)};
  }
  Vec2 second_derivative(const CircularForm& f) const {
    return {-f.radius * std::cos(t), -f.radius * std::sin(t)};
  }
  Vec2 second_derivative(const SegmentForm&) const { return {0.0, 0.0}; }

  double speed(const NodaryForm& f) const {
    const double sn = std::sin(t);
    const double w = std::sqrt(f.beta + sn * sn);
    return radial_gap(f.beta, sn, w) / (w * 2.0 * f.h);
  }
  double speed(const CircularForm& f) const { return f.radius; }
  double speed(const SegmentForm& f) const { return (f.to - f.from).norm(); }
};

// Angle between the lines spanned by u and v, in [0, pi/2]. Insensitive to
// the sign of either vector, which is what a joint between two independently
// parametrised arcs needs.
double line_angle(const Vec2& u, const Vec2& v) {
  const double cross = std::abs(u.x() * v.y() - u.y() * v.x());
  const double dot = std::abs(u.dot(v));
  return std::atan2(cross, dot);
}

JunctionReport make_junction(const DirectedArc& a, const DirectedArc& b,
                             double tol) {
  const Vec2 pa = a.end();
  const Vec2 pb = b.start();
  const Vec2 where = 0.5 * (pa + pb);

  Vec2 ta = a.end_tangent();
  Vec2 tb = b.start_tangent();
  // At the rotation axis the joint condition is a horizontal material
  // tangent (smooth pole), so compare against (1, 0) instead of the axis
  // segment's own vertical tangent.
  if (a.arc.on_axis()) ta = Vec2{1.0, 0.0};
  if (b.arc.on_axis()) tb = Vec2{1.0, 0.0};

  const double pos_gap = (pa - pb).norm();
  const double ang_gap = line_angle(ta, tb);
  return {a.arc.id(), b.arc.id(), where, pos_gap, ang_gap,
          pos_gap <= tol && ang_gap <= tol};
}

}  // namespace

std::string_view arc_name(ArcId id) {
  switch (id) {
    case ArcId::Gamma1:
      return "gamma1";
    case ArcId::Gamma2:
      return "gamma2";
    case ArcId::Gamma3:
      return "gamma3";
    case ArcId::Gamma4:
      return "gamma4";
    case ArcId::Gamma5:
      return "gamma5";
    case ArcId::AxisSegment:
      return "axis";
  }
  throw std::invalid_argument("unknown arc id");
}

ProfileParams ProfileParams::make(double h, double beta, const Tolerance& tol) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::domain_error("profile requires h > 0");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::domain_error("profile requires beta > 0");
  }
  return {h, beta, nodary_radius(h, beta, tol), tol};
}

ProfileArc::ProfileArc(ArcId id, double t_begin, double t_end, ArcForm form)
    : id_(id), t_begin_(t_begin), t_end_(t_end), form_(std::move(form)) {
  if (!(t_begin < t_end)) {
    throw std::invalid_argument("arc requires t_begin < t_end");
  }
}

Vec2 ProfileArc::position(double t) const {
  return std::visit([&](const auto& f) { return Evaluator{t}.position(f); },
                    form_);
}

Vec2 ProfileArc::derivative(double t) const {
  return std::visit([&](const auto& f) { return Evaluator{t}.derivative(f); },
                    form_);
}

Vec2 ProfileArc::second_derivative(double t) const {
  return std::visit(
      [&](const auto& f) { return Evaluator{t}.second_derivative(f); }, form_);
}

double ProfileArc::speed(double t) const {
  return std::visit([&](const auto& f) { return Evaluator{t}.speed(f); },
                    form_);
}

double ProfileArc::length(const Tolerance& tol) const {
  return integrate([this](double t) { return speed(t); }, t_begin_, t_end_,
                   tol);
}

Vec2 DirectedArc::start() const {
  return arc.position(direction > 0 ? arc.t_begin() : arc.t_end());
}

Vec2 DirectedArc::end() const {
  return arc.position(direction > 0 ? arc.t_end() : arc.t_begin());
}

Vec2 DirectedArc::start_tangent() const {
  const double t = direction > 0 ? arc.t_begin() : arc.t_end();
  return double(direction) * arc.derivative(t).normalized();
}

Vec2 DirectedArc::end_tangent() const {
  const double t = direction > 0 ? arc.t_end() : arc.t_begin();
  return double(direction) * arc.derivative(t).normalized();
}

ClosedProfile::ClosedProfile(std::vector<DirectedArc> arcs,
                             double junction_tolerance)
    : arcs_(std::move(arcs)) {
  if (arcs_.size() < 2) {
    throw std::invalid_argument("a closed profile needs at least two arcs");
  }

  // Orient the loop so the enclosed volume of revolution is positive. Only
  // the sign matters here, so a loose tolerance is plenty.
  const Tolerance sign_tol{1e-9, 1e-9, 100'000};
  double signed_volume = 0.0;
  for (const DirectedArc& da : arcs_) {
    const ProfileArc& arc = da.arc;
    signed_volume +=
        double(da.direction) *
        integrate(
            [&arc](double t) {
              const Vec2 p = arc.position(t);
              return p.x() * p.x() * arc.derivative(t).y();
            },
            arc.t_begin(), arc.t_end(), sign_tol);
  }
  if (signed_volume < 0.0) {
    std::reverse(arcs_.begin(), arcs_.end());
    for (DirectedArc& da : arcs_) {
      da.direction = -da.direction;
    }
  }

  junctions_.reserve(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const DirectedArc& a = arcs_[i];
    const DirectedArc& b = arcs_[(i + 1) % arcs_.size()];
    JunctionReport report = make_junction(a, b, junction_tolerance);
    if (report.position_gap > junction_tolerance) {
      throw std::runtime_error(
          "profile junction between " + std::string(arc_name(a.arc.id())) +
          " and " + std::string(arc_name(b.arc.id())) + " has position gap " +
          std::to_string(report.position_gap));
    }
    junctions_.push_back(report);
  }
}

const DirectedArc& ClosedProfile::directed(ArcId id) const {
  for (const DirectedArc& da : arcs_) {
    if (da.arc.id() == id) {
      return da;
    }
  }
  throw std::out_of_range("profile has no arc named " +
                          std::string(arc_name(id)));
}

double ClosedProfile::max_position_gap() const {
  double gap = 0.0;
  for (const JunctionReport& j : junctions_) {
    gap = std::max(gap, j.position_gap);
  }
  return gap;
}

double ClosedProfile::max_tangent_angle_gap() const {
  double gap = 0.0;
  for (const JunctionReport& j : junctions_) {
    gap = std::max(gap, j.tangent_angle_gap);
  }
  return gap;
}

ProfileArc build_arc(const ProfileParams& params, ArcId id) {
  const double h = params.h;
  const double R = params.R;
  const double x0 = std::sqrt(params.beta) / (2.0 * h);

  switch (id) {
    case ArcId::Gamma1:
      return {id, 0.0, kPi, NodaryForm{h, params.beta, params.tol}};
    case ArcId::Gamma2:
      return {id, -kPi / 2.0, kPi / 2.0, CircularForm{{x0, R}, 1.0 / h}};
    case ArcId::Gamma3:
      return {id, -kPi / 2.0, kPi / 2.0, CircularForm{{x0, R}, R}};
    case ArcId::Gamma4:
      return {id, 0.0, 1.0, SegmentForm{{0.0, R + 1.0 / h}, {x0, R + 1.0 / h}}};
    case ArcId::Gamma5:
      return {id, 0.0, 1.0, SegmentForm{{0.0, 2.0 * R}, {x0, 2.0 * R}}};
    case ArcId::AxisSegment:
      return {id, 0.0, 1.0, SegmentForm{{0.0, R + 1.0 / h}, {0.0, 2.0 * R}}};
  }
  throw std::invalid_argument("unknown arc id");
}

ClosedProfile build_closed_profile(const ProfileParams& params) {
  std::vector<DirectedArc> arcs;
  arcs.push_back({build_arc(params, ArcId::Gamma1), +1});
  arcs.push_back({build_arc(params, ArcId::Gamma2), +1});
  arcs.push_back({build_arc(params, ArcId::Gamma4), -1});
  arcs.push_back({build_arc(params, ArcId::AxisSegment), +1});
  arcs.push_back({build_arc(params, ArcId::Gamma5), +1});
  arcs.push_back({build_arc(params, ArcId::Gamma3), -1});
  return ClosedProfile(std::move(arcs), 100.0 * params.tol.abs_tol);
}

std::vector<JunctionReport> check_c1(const ClosedProfile& profile, double tol) {
  std::vector<JunctionReport> reports;
  const auto& arcs = profile.arcs();
  reports.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    reports.push_back(
        make_junction(arcs[i], arcs[(i + 1) % arcs.size()], tol));
  }
  return reports;
}

}  // namespace revsolid
