#include "revsolid/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "revsolid/curvature.hpp"

namespace revsolid {

namespace {

void append_escaped(std::string& out, std::string_view s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

// p values serialize as strings so the sup norm ("inf") and finite
// exponents share one representation.
std::string exponent_label(double p) {
  return std::isinf(p) ? "inf" : format_double(p);
}

void write_params(JsonWriter& w, const ProfileParams& params) {
  w.key("params").begin_object();
  w.key("h").value(params.h);
  w.key("beta").value(params.beta);
  w.key("R").value(params.R);
  w.key("quad_abs_tol").value(params.tol.abs_tol);
  w.key("quad_rel_tol").value(params.tol.rel_tol);
  w.end_object();
}

void write_clause(JsonWriter& w, std::string_view name,
                  const CertClause& clause) {
  w.key(name).begin_object();
  w.key("measured").value(clause.measured);
  w.key("threshold").value(clause.threshold);
  w.key("pass").value(clause.pass);
  w.end_object();
}

void write_theorem_body(JsonWriter& w, const TheoremCertificate& cert) {
  w.key("epsilon").value(cert.epsilon);
  w.key("pass").value(cert.pass);
  w.key("cert_tol").value(cert.cert_tol);
  w.key("iterations").value(cert.iterations);
  write_params(w, cert.params);
  w.key("area").value(cert.area);
  w.key("volume").value(cert.volume);
  w.key("sup_abs_H").value(cert.sup_abs_H);
  w.key("clauses").begin_object();
  write_clause(w, "sup_abs_H", cert.sup_clause);
  write_clause(w, "area_gap", cert.area_clause);
  write_clause(w, "volume", cert.volume_clause);
  w.end_object();
  w.key("trajectory").begin_array();
  for (const CertIterate& row : cert.trajectory) {
    w.begin_object();
    w.key("beta").value(row.beta);
    w.key("R").value(row.R);
    w.key("area").value(row.area);
    w.key("volume").value(row.volume);
    w.key("sup_abs_H").value(row.sup_abs_H);
    w.key("pass").value(row.pass);
    w.end_object();
  }
  w.end_array();
}

}  // namespace

std::string format_double(double v) {
  char buf[48];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_.push_back('{');
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_.push_back('}');
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  comma();
  out_.push_back('[');
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_.push_back(']');
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  comma();
  append_escaped(out_, name);
  out_.push_back(':');
  need_comma_ = false;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  comma();
  if (std::isfinite(v)) {
    out_ += format_double(v);
  } else {
    append_escaped(out_, format_double(v));
  }
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  comma();
  out_ += std::to_string(v);
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  comma();
  out_ += v ? "true" : "false";
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  comma();
  append_escaped(out_, v);
  need_comma_ = true;
  return *this;
}

void JsonWriter::comma() {
  if (need_comma_) {
    out_.push_back(',');
  }
}

std::string to_json(const RunReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value(report.command);
  w.key("version").value(version_string());
  write_params(w, report.params);
  w.key("measures").begin_object();
  w.key("area").value(report.measures.area);
  w.key("volume").value(report.measures.volume);
  w.key("willmore").value(report.measures.willmore);
  w.key("sup_abs_H").value(report.measures.sup_abs_H);
  w.key("lp_norms").begin_array();
  for (const auto& [p, value] : report.measures.lp_norms) {
    w.begin_object();
    w.key("p").value(exponent_label(p));
    w.key("value").value(value);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  w.key("curvature_band").begin_object();
  w.key("inf_H").value(report.band.inf_H);
  w.key("sup_H").value(report.band.sup_H);
  w.key("sup_abs_H").value(report.band.sup_abs_H);
  w.end_object();
  w.key("junctions").begin_object();
  w.key("max_position_gap").value(report.max_position_gap);
  w.key("max_tangent_angle_gap").value(report.max_tangent_angle_gap);
  w.end_object();
  w.end_object();
  return w.str();
}

std::string to_json(const TheoremCertificate& cert) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value("theorem");
  w.key("version").value(version_string());
  write_theorem_body(w, cert);
  w.end_object();
  return w.str();
}

std::string to_json(const CorollaryCertificate& cert) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value("corollary");
  w.key("version").value(version_string());
  w.key("p").value(exponent_label(cert.p));
  w.key("pass").value(cert.pass);
  w.key("epsilon").value(cert.epsilon);
  w.key("epsilons_tried").begin_array();
  for (double eps : cert.epsilons_tried) {
    w.value(eps);
  }
  w.end_array();
  w.key("lhs").value(cert.lhs);
  w.key("rhs").value(cert.rhs);
  w.key("margin").value(cert.rhs - cert.lhs);
  w.key("lhs_pow_p").value(cert.lhs_pow_p);
  w.key("majorant").value(cert.majorant);
  w.key("majorant_ok").value(cert.majorant_ok);
  w.key("theorem").begin_object();
  write_theorem_body(w, cert.theorem);
  w.end_object();
  w.end_object();
  return w.str();
}

std::string profile_csv(const ClosedProfile& profile, int n_per_arc) {
  if (n_per_arc < 1) {
    throw std::invalid_argument("profile_csv needs n_per_arc >= 1");
  }
  std::string out = "x,y,arc,t\n";
  for (const DirectedArc& da : profile.arcs()) {
    const double t_from =
        da.direction > 0 ? da.arc.t_begin() : da.arc.t_end();
    const double t_to = da.direction > 0 ? da.arc.t_end() : da.arc.t_begin();
    for (int i = 0; i <= n_per_arc; ++i) {
      const double t =
          (i == n_per_arc) ? t_to
                           : t_from + (t_to - t_from) * i / n_per_arc;
      const Vec2 p = da.arc.position(t);
      out += format_double(p.x());
      out.push_back(',');
      out += format_double(p.y());
      out.push_back(',');
      out += arc_name(da.arc.id());
      out.push_back(',');
      out += format_double(t);
      out.push_back('\n');
    }
  }
  return out;
}

std::string curvature_csv(const ClosedProfile& profile, int n_per_arc) {
  if (n_per_arc < 1) {
    throw std::invalid_argument("curvature_csv needs n_per_arc >= 1");
  }
  std::string out = "arc,t,x,k_meridian,k_parallel,H\n";
  for (const DirectedArc& da : profile.arcs()) {
    if (da.arc.on_axis()) {
      continue;
    }
    // Interior midpoints: curvature is one-sided at the junctions, so the
    // sample grid stays away from the arc ends.
    const double t0 = da.arc.t_begin();
    const double dt = (da.arc.t_end() - t0) / n_per_arc;
    for (int i = 0; i < n_per_arc; ++i) {
      const CurvatureSample s =
          principal_curvatures(da, t0 + (i + 0.5) * dt);
      out += arc_name(s.arc);
      out.push_back(',');
      out += format_double(s.t);
      out.push_back(',');
      out += format_double(s.x);
      out.push_back(',');
      out += format_double(s.k_meridian);
      out.push_back(',');
      out += format_double(s.k_parallel);
      out.push_back(',');
      out += format_double(s.H);
      out.push_back('\n');
    }
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "beta,R,area,volume,sup_abs_H,inf_H\n";
  for (const SweepRow& row : sweep.rows) {
    out += format_double(row.beta);
    out.push_back(',');
    out += format_double(row.R);
    out.push_back(',');
    out += format_double(row.area);
    out.push_back(',');
    out += format_double(row.volume);
    out.push_back(',');
    out += format_double(row.sup_abs_H);
    out.push_back(',');
    out += format_double(row.inf_H);
    out.push_back('\n');
  }
  return out;
}

std::string_view version_string() { return "0.1.0"; }

}  // namespace revsolid
