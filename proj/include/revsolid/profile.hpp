#pragma once

#include <Eigen/Core>
#include <string_view>
#include <variant>
#include <vector>

#include "revsolid/quadrature.hpp"

namespace revsolid {

using Vec2 = Eigen::Vector2d;

/// Identifiers for the arcs of the standard profile. gamma1 is the
/// constant-mean-curvature (nodary) arc, gamma2 the outer cap semicircle,
/// gamma3 the inner cap semicircle, gamma4/gamma5 the flat annular rims, and
/// the axis segment closes the loop along x = 0.
enum class ArcId {
  Gamma1,
  Gamma2,
  Gamma3,
  Gamma4,
  Gamma5,
  AxisSegment,
};

std::string_view arc_name(ArcId id);

/// Parameters of one profile instance: curvature scale h > 0, shape
/// parameter beta > 0, and the derived inner cap radius
/// R = nodary_radius(h, beta).
struct ProfileParams {
  double h = 0.0;
  double beta = 0.0;
  double R = 0.0;
  Tolerance tol;

  /// Validates h > 0 and beta > 0 (std::domain_error otherwise) and computes
  /// R. The certified statements take beta in (0, 1]; larger values build
  /// fine but are outside that range (see beta_in_unit_range).
  static ProfileParams make(double h, double beta, const Tolerance& tol = {});

  bool beta_in_unit_range() const { return beta > 0.0 && beta <= 1.0; }
};

/// Closed-form arc shapes. Derivatives are analytic throughout; nothing in
/// the library differentiates numerically.
struct NodaryForm {
  double h;
  double beta;
  Tolerance tol;
};

struct CircularForm {
  Vec2 center;
  double radius;
};

struct SegmentForm {
  Vec2 from;
  Vec2 to;
};

using ArcForm = std::variant<NodaryForm, CircularForm, SegmentForm>;

/// One parametrised arc of a profile curve in the half-plane x >= 0.
class ProfileArc {
 public:
  ProfileArc(ArcId id, double t_begin, double t_end, ArcForm form);

  ArcId id() const { return id_; }
  double t_begin() const { return t_begin_; }
  double t_end() const { return t_end_; }
  bool on_axis() const { return id_ == ArcId::AxisSegment; }
  const ArcForm& form() const { return form_; }

  Vec2 position(double t) const;
  Vec2 derivative(double t) const;
  Vec2 second_derivative(double t) const;
  /// |derivative(t)| in closed form (no cancellation near slow points).
  double speed(double t) const;
  double length(const Tolerance& tol = {}) const;

 private:
  ArcId id_;
  double t_begin_;
  double t_end_;
  ArcForm form_;
};

/// An arc plus the direction (+1 or -1) in which the closed traversal walks
/// it. Direction -1 means from t_end towards t_begin.
struct DirectedArc {
  ProfileArc arc;
  int direction = 1;

  Vec2 start() const;
  Vec2 end() const;
  /// Unit tangent in traversal direction at the start (resp. end) point.
  Vec2 start_tangent() const;
  Vec2 end_tangent() const;
};

/// Mismatch diagnostics at the joint between two consecutive arcs.
/// tangent_angle_gap is the angle between the two tangent *lines* (radians,
/// in [0, pi/2]); where either arc is the axis segment, it is measured
/// between the material arc's tangent and the horizontal, which captures the
/// smooth-pole condition at the rotation axis.
struct JunctionReport {
  ArcId arc_a;
  ArcId arc_b;
  Vec2 where;
  double position_gap;
  double tangent_angle_gap;
  bool ok;
};

/// A simple closed curve assembled from directed arcs, traversed so that the
/// solid of revolution it bounds has positive volume (the constructor flips
/// the whole loop if handed the clockwise orientation).
class ClosedProfile {
 public:
  /// Chains the arcs in order, wrapping around. Throws std::runtime_error if
  /// any junction position gap exceeds `junction_tolerance`.
  ClosedProfile(std::vector<DirectedArc> arcs, double junction_tolerance);

  const std::vector<DirectedArc>& arcs() const { return arcs_; }
  const std::vector<JunctionReport>& junctions() const { return junctions_; }

  /// First directed arc with the given id; throws std::out_of_range if the
  /// profile has none.
  const DirectedArc& directed(ArcId id) const;

  double max_position_gap() const;
  double max_tangent_angle_gap() const;

 private:
  std::vector<DirectedArc> arcs_;
  std::vector<JunctionReport> junctions_;
};

/// The arc of the standard profile with the given id, on its canonical
/// parameter interval.
ProfileArc build_arc(const ProfileParams& params, ArcId id);

/// The standard closed profile: gamma1 (nodary), gamma2 (outer cap), gamma4
/// (outer rim, reversed), axis segment, gamma5 (inner rim), gamma3 (inner
/// cap, reversed). Junction gaps are checked against 100 * tol.abs_tol.
ClosedProfile build_closed_profile(const ProfileParams& params);

/// Recomputes junction diagnostics, stamping `ok` against the given
/// tolerance. Always returns all junctions; pass/fail is the caller's call.
std::vector<JunctionReport> check_c1(const ClosedProfile& profile, double tol);

}  // namespace revsolid
