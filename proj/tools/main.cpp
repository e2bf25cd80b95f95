// Command-line front end: builds profile instances, certifies the bounded
// mean curvature statements, sweeps the small-beta asymptotics, and exports
// meshes. Exit codes: 0 success / certificate passed, 1 certificate failed,
// 2 invalid input, 3 I/O failure. All file outputs are byte-deterministic;
// timing goes to stdout only.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revsolid/certify.hpp"
#include "revsolid/curvature.hpp"
#include "revsolid/measures.hpp"
#include "revsolid/mesh.hpp"
#include "revsolid/profile.hpp"
#include "revsolid/report.hpp"

namespace {

using namespace revsolid;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw IoError("failed while writing '" + path + "'");
  }
}

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") {
    return std::numeric_limits<double>::infinity();
  }
  std::size_t used = 0;
  const double p = std::stod(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("cannot parse exponent '" + text + "'");
  }
  return p;
}

void print_clause(std::ostream& os, const char* name,
                  const CertClause& clause) {
  os << "  " << name << ": " << format_double(clause.measured)
     << (clause.pass ? " <= " : " > ") << format_double(clause.threshold)
     << (clause.pass ? "  [ok]" : "  [violated]") << "\n";
}

int run_build(double h, double beta, double tol_value,
              const std::string& json_path, const std::string& profile_path,
              const std::string& curvature_path, const std::string& mesh_path,
              const std::string& format_name, int n_profile, int n_angular) {
  Timer timer;
  Tolerance tol;
  tol.abs_tol = tol_value;
  tol.rel_tol = tol_value;

  const ProfileParams params = ProfileParams::make(h, beta, tol);
  const ClosedProfile profile = build_closed_profile(params);

  const std::vector<double> exponents{2.0, 3.0};
  RunReport report;
  report.command = "build";
  report.params = params;
  report.measures = measure(profile, exponents, tol);
  report.band = curvature_band(profile);
  report.max_position_gap = profile.max_position_gap();
  report.max_tangent_angle_gap = profile.max_tangent_angle_gap();

  if (!json_path.empty()) {
    write_file(json_path, to_json(report) + "\n");
  }
  if (!profile_path.empty()) {
    write_file(profile_path, profile_csv(profile, 256));
  }
  if (!curvature_path.empty()) {
    write_file(curvature_path, curvature_csv(profile, 256));
  }
  if (!mesh_path.empty()) {
    const MeshSurface mesh = tessellate(profile, n_profile, n_angular);
    const MeshFormat format =
        format_name == "stl" ? MeshFormat::StlBinary : MeshFormat::Obj;
    std::ostringstream buffer(std::ios::binary);
    export_mesh(mesh, format, buffer);
    write_file(mesh_path, buffer.str());
    const MeshTopologyReport topo = analyze_topology(mesh);
    std::cout << "mesh: " << mesh.vertices.size() << " vertices, "
              << mesh.triangles.size() << " triangles, euler "
              << topo.euler_characteristic
              << (topo.watertight() ? ", watertight" : ", NOT watertight")
              << "\n";
  }

  std::cout << "h = " << format_double(params.h)
            << ", beta = " << format_double(params.beta) << "\n"
            << "R = " << format_double(params.R) << "\n"
            << "area = " << format_double(report.measures.area) << "\n"
            << "volume = " << format_double(report.measures.volume) << "\n"
            << "sup |H| = " << format_double(report.measures.sup_abs_H)
            << "  (H range [" << format_double(report.band.inf_H) << ", "
            << format_double(report.band.sup_H) << "])\n"
            << "junction gaps: position "
            << format_double(report.max_position_gap) << ", tangent angle "
            << format_double(report.max_tangent_angle_gap) << "\n"
            << "elapsed_ms " << timer.ms() << "\n";
  return 0;
}

int run_theorem(double epsilon, double tol_value,
                const std::string& json_path) {
  Timer timer;
  Tolerance tol;
  tol.abs_tol = tol_value;
  tol.rel_tol = tol_value;

  const TheoremCertificate cert = certify_theorem(epsilon, 0.25, 60, tol);
  if (!json_path.empty()) {
    write_file(json_path, to_json(cert) + "\n");
  }

  std::cout << "epsilon = " << format_double(cert.epsilon)
            << ", h = " << format_double(cert.params.h)
            << ", instances tried = " << cert.iterations << "\n"
            << "instance: beta = " << format_double(cert.params.beta)
            << ", R = " << format_double(cert.params.R) << "\n";
  print_clause(std::cout, "sup |H| ", cert.sup_clause);
  print_clause(std::cout, "|area - 8 pi|", cert.area_clause);
  print_clause(std::cout, "volume", cert.volume_clause);
  std::cout << "verdict: " << (cert.pass ? "PASS" : "FAIL") << "\n"
            << "elapsed_ms " << timer.ms() << "\n";
  return cert.pass ? 0 : 1;
}

int run_corollary(const std::string& p_text, const std::string& json_path) {
  Timer timer;
  const double p = parse_exponent(p_text);
  const CorollaryCertificate cert = certify_corollary(p);
  if (!json_path.empty()) {
    write_file(json_path, to_json(cert) + "\n");
  }

  std::cout << "p = " << (std::isinf(p) ? "inf" : format_double(p))
            << ", epsilon = " << format_double(cert.epsilon) << "\n"
            << "lhs (rescaled Lp norm)  = " << format_double(cert.lhs) << "\n"
            << "rhs (unit-volume ball)  = " << format_double(cert.rhs) << "\n"
            << "margin                  = " << format_double(cert.rhs - cert.lhs)
            << "\n"
            << "a-priori majorant check: "
            << (cert.majorant_ok ? "ok" : "violated") << "\n"
            << "verdict: " << (cert.pass ? "PASS" : "FAIL") << "\n"
            << "elapsed_ms " << timer.ms() << "\n";
  return cert.pass ? 0 : 1;
}

int run_sweep(double h, double beta_start, double beta_ratio, int steps,
              const std::string& csv_path) {
  Timer timer;
  if (steps < 1) {
    throw std::invalid_argument("sweep needs at least one step");
  }
  std::vector<double> betas;
  double beta = beta_start;
  for (int i = 0; i < steps; ++i, beta *= beta_ratio) {
    betas.push_back(beta);
  }

  const SweepResult sweep = asymptotics_sweep(h, betas);
  if (!csv_path.empty()) {
    write_file(csv_path, sweep_csv(sweep));
  }

  std::cout << "h = " << format_double(sweep.h) << "\n"
            << "beta, R, area, volume, sup_abs_H, inf_H\n";
  for (const SweepRow& row : sweep.rows) {
    std::cout << format_double(row.beta) << ", " << format_double(row.R)
              << ", " << format_double(row.area) << ", "
              << format_double(row.volume) << ", "
              << format_double(row.sup_abs_H) << ", "
              << format_double(row.inf_H) << "\n";
  }
  std::cout << "fitted orders vs beta: R " << format_double(sweep.fit.order_R)
            << ", area " << format_double(sweep.fit.order_area) << ", volume "
            << format_double(sweep.fit.order_volume) << ", sup|H| "
            << format_double(sweep.fit.order_sup) << "\n"
            << "elapsed_ms " << timer.ms() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Solids of revolution with mean curvature bounded by 1, surface area "
      "near 8 pi, and arbitrarily small volume"};
  app.require_subcommand(1);
  // --h is the mean curvature scale, so help keeps only its long form
  // (subcommands inherit the parent's help flag policy).
  app.set_help_flag("--help", "print this help message and exit");

  // build
  double h = 1.0, beta = 0.5, tol_value = 1e-12;
  std::string json_path, profile_path, curvature_path, mesh_path;
  std::string format_name = "obj";
  int n_profile = 256, n_angular = 256;
  CLI::App* build = app.add_subcommand("build", "measure one profile instance");
  build->add_option("--h", h, "mean curvature scale (h > 0)");
  build->add_option("--beta", beta, "shape parameter (beta > 0)");
  build->add_option("--tol", tol_value, "quadrature tolerance");
  build->add_option("--json", json_path, "write the JSON report here");
  build->add_option("--profile-csv", profile_path, "write profile samples here");
  build->add_option("--curvature-csv", curvature_path,
                    "write curvature samples here");
  build->add_option("--mesh-out", mesh_path, "write a surface mesh here");
  build->add_option("--format", format_name, "mesh format: obj or stl")
      ->check(CLI::IsMember({"obj", "stl"}));
  build->add_option("--n-profile", n_profile,
                    "total profile segments for the mesh");
  build->add_option("--n-angular", n_angular, "angular steps for the mesh");

  // theorem
  double epsilon = 0.1;
  double theorem_tol = 1e-12;
  std::string theorem_json;
  CLI::App* theorem = app.add_subcommand(
      "theorem", "certify sup|H| <= 1, |area - 8 pi| <= eps, volume <= eps");
  theorem->add_option("--epsilon", epsilon, "tightness of the certificate")
      ->required();
  theorem->add_option("--tol", theorem_tol, "quadrature tolerance");
  theorem->add_option("--json", theorem_json, "write the certificate here");

  // corollary
  std::string p_text;
  std::string corollary_json;
  CLI::App* corollary = app.add_subcommand(
      "corollary",
      "certify that the unit-volume rescaling beats the ball in Lp");
  corollary->add_option("--p", p_text, "exponent p > 2, or 'inf'")->required();
  corollary->add_option("--json", corollary_json, "write the certificate here");

  // sweep
  double sweep_h = 1.0, beta_start = 0.1, beta_ratio = 0.1;
  int steps = 6;
  std::string sweep_csv_path;
  CLI::App* sweep =
      app.add_subcommand("sweep", "trace the beta -> 0 asymptotics at fixed h");
  sweep->add_option("--h", sweep_h, "mean curvature scale");
  sweep->add_option("--beta-start", beta_start, "largest beta");
  sweep->add_option("--beta-ratio", beta_ratio, "geometric ratio in (0, 1)");
  sweep->add_option("--steps", steps, "number of rows");
  sweep->add_option("--csv", sweep_csv_path, "write the sweep table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      return run_build(h, beta, tol_value, json_path, profile_path,
                       curvature_path, mesh_path, format_name, n_profile,
                       n_angular);
    }
    if (theorem->parsed()) {
      return run_theorem(epsilon, theorem_tol, theorem_json);
    }
    if (corollary->parsed()) {
      return run_corollary(p_text, corollary_json);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_h, beta_start, beta_ratio, steps, sweep_csv_path);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
