#pragma once

#include <string>
#include <string_view>

#include "revsolid/certify.hpp"
#include "revsolid/measures.hpp"
#include "revsolid/mesh.hpp"
#include "revsolid/profile.hpp"

namespace revsolid {

/// Shortest round-trip-exact decimal for v (17 significant digits via
/// std::to_chars), so identical inputs serialize to identical bytes on any
/// run. Non-finite values become "inf"/"-inf"/"nan" (callers quote them
/// where JSON validity matters).
std::string format_double(double v);

/// Minimal streaming JSON emitter with caller-controlled key order and
/// format_double for numbers. Deliberately tiny: determinism of the output
/// bytes is the point.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  // Keeps string literals from decaying to the bool overload.
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }

  const std::string& str() const { return out_; }

 private:
  void comma();

  std::string out_;
  bool need_comma_ = false;
};

/// Full per-instance report of one profile build, serialized with a stable
/// schema (see docs/output_formats.md).
struct RunReport {
  std::string command;
  ProfileParams params;
  MeasureSet measures;
  CurvatureBand band;
  double max_position_gap = 0.0;
  double max_tangent_angle_gap = 0.0;
};

std::string to_json(const RunReport& report);
std::string to_json(const TheoremCertificate& cert);
std::string to_json(const CorollaryCertificate& cert);

/// CSV with header x,y,arc,t: points sampled along the closed traversal,
/// n per arc (parameter-uniform, both endpoints included).
std::string profile_csv(const ClosedProfile& profile, int n_per_arc);

/// CSV with header arc,t,x,k_meridian,k_parallel,H over the material arcs,
/// n interior samples per arc.
std::string curvature_csv(const ClosedProfile& profile, int n_per_arc);

/// CSV with header beta,R,area,volume,sup_abs_H,inf_H, one row per sweep
/// beta, largest first.
std::string sweep_csv(const SweepResult& sweep);

std::string_view version_string();

}  // namespace revsolid
