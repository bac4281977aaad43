// Command-line front end: verification, point evaluation, meshing and sweeps.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monosurf/analysis.hpp"
#include "monosurf/mesh.hpp"
#include "monosurf/sweep.hpp"
#include "monosurf/verification.hpp"

using namespace monosurf;
using nlohmann::json;

namespace {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json cvec_json(const CVec3& v) { return json::array({complex_json(v[0]), complex_json(v[1]), complex_json(v[2])}); }

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

int run_verify(const std::vector<double>& ks, std::optional<double> tol, const std::string& out_path) {
  VerificationOptions opts;
  opts.tolerance = tol;
  const VerificationReport report = run_verification(ks, opts);
  const std::string text = report.to_json().dump(2);
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    auto out = open_output(out_path);
    out << text << '\n';
    finish_output(out, out_path);
  }
  for (const auto& c : report.checks) {
    if (!c.pass && !c.informational) std::cerr << "FAIL " << c.name << " k=" << (c.k ? *c.k : 0.0) << '\n';
  }
  return report.passed() ? 0 : 1;
}

int run_eval(double k, const std::vector<double>& u_parts, const std::string& frame) {
  const MonopoleModuli m = moduli_from_k(k);
  const cplx u{u_parts.at(0), u_parts.at(1)};
  const bool standard = frame == "standard";
  const auto dir = FrameDirection::to_standard;

  const NullPoint p = phi_null(u, m);
  const SurfaceSample s = immerse(u, m);
  const ExtendedComplex g = gauss_map(u, m);

  json out;
  out["k"] = k;
  out["u"] = complex_json(u);
  out["frame"] = standard ? "standard" : "monopole";
  out["Phi"] = cvec_json(standard ? frame_transform(p.phi, m, dir) : p.phi);
  out["dPhi"] = cvec_json(standard ? frame_transform(p.dphi, m, dir) : p.dphi);
  out["phi"] = vec_json(standard ? frame_transform(s.pos, m, dir) : s.pos);
  out["normal"] = vec_json(standard ? frame_transform(s.normal, m, dir) : s.normal);
  out["gauss_map"] = g.infinite ? json("infinity") : complex_json(g.value);
  out["lambda"] = s.lambda;
  out["G"] = s.g_density;
  out["K"] = std::isfinite(s.gauss_curv) ? json(s.gauss_curv) : json(nullptr);
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct MeshArgs {
  double k = 0.5;
  std::vector<double> domain;
  std::vector<int> res;
  std::string units = "period";
  std::string format = "obj";
  std::string out;
  std::string preset;
  std::optional<double> exclusion;
};

int run_mesh(const MeshArgs& a) {
  PatchSpec spec;
  if (!a.preset.empty()) {
    const FigurePreset fp = a.preset == "fig1" ? FigurePreset::fig1 : FigurePreset::fig2;
    const int nx = a.res.empty() ? (fp == FigurePreset::fig1 ? 256 : 32) : a.res.at(0);
    const int ny = a.res.empty() ? (fp == FigurePreset::fig1 ? 32 : 256) : a.res.at(1);
    spec = figure_preset(fp, nx, ny);
  } else {
    if (a.domain.size() != 4) throw DomainError("mesh: --domain needs x0,x1,y0,y1 (or use --preset)");
    spec.k = a.k;
    spec.x_min = a.domain[0];
    spec.x_max = a.domain[1];
    spec.y_min = a.domain[2];
    spec.y_max = a.domain[3];
    spec.nx = a.res.empty() ? 64 : a.res.at(0);
    spec.ny = a.res.empty() ? 64 : a.res.at(1);
    spec.units = a.units == "absolute" ? Units::absolute : Units::period;
  }
  const MonopoleModuli m = moduli_from_k(spec.k);
  spec.exclusion_radius = a.exclusion.value_or(default_exclusion_radius(m));
  const SurfaceMesh mesh = sample_patch(spec, m);
  export_mesh(mesh, parse_format(a.format), a.out);
  std::cerr << "wrote " << a.out << ": " << mesh.vertices.size() << " vertices, " << mesh.faces.size()
            << " faces, " << mesh.metadata.excluded << " excluded\n";
  return 0;
}

int run_branch_points(double k) {
  const MonopoleModuli m = moduli_from_k(k);
  const auto beta = branch_points(m);
  json out;
  out["k"] = k;
  out["elliptic_K"] = m.big_k;
  out["frame"] = "monopole";
  out["beta1"] = vec_json(beta[0]);
  out["beta2"] = vec_json(beta[1]);
  out["beta3"] = vec_json(beta[2]);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_curvature_map(double k, int n, const std::string& path) {
  if (n < 2) throw DomainError("curvature-map: --res must be at least 2");
  const MonopoleModuli m = moduli_from_k(k);
  const double w1 = m.lattice.omega1();
  const double w2 = m.lattice.omega2_mag();
  auto out = open_output(path);
  out << "x_re,y_im,G,G1,G2\n";
  // Cell midpoints over the fundamental rectangle; G vanishes at the ends.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const cplx u{w1 * (i + 0.5) / n, w2 * (j + 0.5) / n};
      const double g = curvature_density(u, m);
      out << format_17(u.real()) << ',' << format_17(u.imag()) << ',' << format_17(g) << ','
          << format_17(w1 * w1 * g) << ',' << format_17(w2 * w2 * g) << '\n';
    }
  }
  finish_output(out, path);
  return 0;
}

int run_spectral_lines(double k, int n, const std::string& path) {
  if (n < 1) throw DomainError("spectral-lines: --n must be positive");
  const MonopoleModuli m = moduli_from_k(k);
  auto out = open_output(path);
  out << "zeta_re,zeta_im,eta_re,eta_im,px,py,pz,dx,dy,dz,residual\n";
  // Fibonacci points on the sphere give the line directions; zeta = P(direction).
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 d{r * std::cos(golden * i), r * std::sin(golden * i), z};
    const ExtendedComplex zeta = stereographic(d);
    if (zeta.infinite) continue;
    for (const cplx eta : spectral_eta(zeta.value, m)) {
      const OrientedLine line = spectral_line(zeta.value, eta);
      const double res = incidence_residual(line.point, zeta.value, eta);
      const double row[11] = {zeta.value.real(), zeta.value.imag(), eta.real(),        eta.imag(),
                              line.point[0],     line.point[1],     line.point[2],     line.direction[0],
                              line.direction[1], line.direction[2], res};
      for (int c = 0; c < 11; ++c) out << (c ? "," : "") << format_17(row[c]);
      out << '\n';
    }
  }
  finish_output(out, path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal surfaces from charge-2 monopole spectral curves"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<double> tol;
  app.add_option("--tol", tol, "Override every verification tolerance")->check(CLI::NonNegativeNumber);

  std::vector<double> verify_ks;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run the residual checks and print a JSON report");
  verify->add_option("--k", verify_ks, "Comma-separated moduli")->delimiter(',');
  verify->add_option("--out", verify_out, "Write the report to a file instead of stdout");

  double eval_k = 0.5;
  std::vector<double> eval_u;
  std::string eval_frame = "monopole";
  auto* eval = app.add_subcommand("eval", "Evaluate the surface at one parameter value");
  eval->add_option("--k", eval_k)->required();
  eval->add_option("--u", eval_u, "re,im")->delimiter(',')->expected(2)->required();
  eval->add_option("--frame", eval_frame)->check(CLI::IsMember({"monopole", "standard"}));

  MeshArgs mesh_args;
  auto* mesh = app.add_subcommand("mesh", "Sample a parameter patch and export a mesh");
  mesh->add_option("--k", mesh_args.k);
  mesh->add_option("--domain", mesh_args.domain, "x0,x1,y0,y1")->delimiter(',')->expected(4);
  mesh->add_option("--res", mesh_args.res, "nx,ny")->delimiter(',')->expected(2);
  mesh->add_option("--units", mesh_args.units)->check(CLI::IsMember({"period", "absolute"}));
  mesh->add_option("--format", mesh_args.format)->check(CLI::IsMember({"obj", "ply", "csv"}));
  mesh->add_option("--out", mesh_args.out)->required();
  mesh->add_option("--preset", mesh_args.preset)->check(CLI::IsMember({"fig1", "fig2"}));
  mesh->add_option("--exclusion", mesh_args.exclusion, "End exclusion radius (absolute u units)")
      ->check(CLI::NonNegativeNumber);

  double bp_k = 0.5;
  auto* bp = app.add_subcommand("branch-points", "Print the metric branch points");
  bp->add_option("--k", bp_k)->required();

  double cm_k = 0.5;
  int cm_res = 128;
  std::string cm_out;
  auto* cmap = app.add_subcommand("curvature-map", "Tabulate G, G1 and G2 over the period rectangle");
  cmap->add_option("--k", cm_k)->required();
  cmap->add_option("--res", cm_res);
  cmap->add_option("--out", cm_out)->required();

  std::vector<double> sw_ks;
  std::string sw_preset = "star";
  std::string sw_out;
  std::string sw_format = "obj";
  std::vector<int> sw_res;
  auto* sw = app.add_subcommand("sweep", "Mesh and summarize a list of moduli");
  sw->add_option("--k", sw_ks)->delimiter(',')->required();
  sw->add_option("--preset", sw_preset)->check(CLI::IsMember({"star", "higgs", "full"}));
  sw->add_option("--out", sw_out)->required();
  sw->add_option("--format", sw_format)->check(CLI::IsMember({"obj", "ply", "csv"}));
  sw->add_option("--res", sw_res, "nx,ny")->delimiter(',')->expected(2);

  double sl_k = 0.5;
  int sl_n = 64;
  std::string sl_out;
  auto* sl = app.add_subcommand("spectral-lines", "Sample oriented lines of the spectral curve");
  sl->add_option("--k", sl_k)->required();
  sl->add_option("--n", sl_n);
  sl->add_option("--out", sl_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(verify_ks, tol, verify_out);
    if (*eval) return run_eval(eval_k, eval_u, eval_frame);
    if (*mesh) return run_mesh(mesh_args);
    if (*bp) return run_branch_points(bp_k);
    if (*cmap) return run_curvature_map(cm_k, cm_res, cm_out);
    if (*sw) {
      SweepOptions opts;
      opts.format = parse_format(sw_format);
      if (!sw_res.empty()) {
        opts.nx = sw_res[0];
        opts.ny = sw_res[1];
      }
      const auto rows = sweep(sw_ks, parse_sweep_preset(sw_preset), sw_out, opts);
      std::cerr << "wrote " << rows.size() << " meshes and summary.csv to " << sw_out << '\n';
      return 0;
    }
    if (*sl) return run_spectral_lines(sl_k, sl_n, sl_out);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
