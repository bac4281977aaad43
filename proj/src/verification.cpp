#include "monosurf/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace monosurf {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

bool near_half_lattice(cplx u, const RectLattice& lat, double radius) {
  const cplx halves[4] = {0.0, cplx{0.5 * lat.omega1()}, 0.5 * lat.omega2(), 0.5 * lat.omega3()};
  for (const cplx h : halves) {
    if (lat.distance_to_lattice(u - h) < radius) return true;
  }
  return false;
}

}  // namespace

std::array<std::array<cplx, 3>, 4> quarter_period_table(double k) {
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const double s = std::sqrt(k * kp);
  const double kk = k * kp;
  const double one_minus_kp = k * k / (1.0 + kp);  // 1 - k' without cancellation
  std::array<std::array<cplx, 3>, 4> t{};
  t[0] = {cplx{(1.0 + 3.0 * kp + kp * kp) / (3.0 * kk)}, cplx{-(1.0 + 3.0 * k + k * k) / (3.0 * kk)},
          cplx{(k * k - kp * kp) / (3.0 * kk), -1.0}};
  t[1] = {cplx{-2.0 * (1.0 + kp) / (k * s)}, cplx{0.0, -2.0 * (1.0 + k) / (kp * s)},
          2.0 * cplx{kp, k} / s};
  t[2] = {cplx{4.0 * (1.0 + kp) / (kp * one_minus_kp)}, cplx{4.0 * (1.0 + k) / (k * (1.0 - k))},
          cplx{-8.0, 4.0 * (kp * kp - k * k) / kk}};
  t[3] = {cplx{-8.0 * (1.0 + 3.0 * kp + kp * kp) / (kp * one_minus_kp * s)},
          cplx{0.0, 8.0 * (1.0 + 3.0 * k + k * k) / (k * (1.0 - k) * s)},
          8.0 * cplx{(5.0 * k * k - 1.0) / (k * s), -(5.0 * kp * kp - 1.0) / (kp * s)}};
  return t;
}

std::vector<cplx> random_regular_points(const MonopoleModuli& m, std::size_t count, std::uint64_t seed) {
  const RectLattice& lat = m.lattice;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double radius = 0.05 * lat.omega1();
  std::vector<cplx> out;
  out.reserve(count);
  while (out.size() < count) {
    const cplx u{unit(rng) * lat.omega1(), unit(rng) * lat.omega2_mag()};
    // Ends sit where 2u is a lattice point; wp'(u) vanishes at the half periods.
    if (near_half_lattice(u, lat, radius) || near_half_lattice(2.0 * u, lat, 2.0 * radius)) continue;
    out.push_back(u);
  }
  return out;
}

double quarter_values_residual(const MonopoleModuli& m) {
  const auto table = quarter_period_table(m.k);
  const cplx pts[3] = {cplx{0.25 * m.lattice.omega1()}, 0.25 * m.lattice.omega2(), 0.25 * m.lattice.omega3()};
  double worst = 0.0;
  for (std::size_t c = 0; c < 3; ++c) {
    const WpJet j = wp_jet(pts[c], m.lattice);
    const cplx got[4] = {j.p, j.p1, j.p2, j.p3};
    for (std::size_t r = 0; r < 4; ++r) worst = std::max(worst, rel(got[r], table[r][c]));
  }
  return worst;
}

double lattice_roots_residual(const MonopoleModuli& m) {
  const RectLattice& lat = m.lattice;
  const double k = m.k;
  const double kp = m.k_prime;
  const double kk = k * kp;
  const double want[3] = {(2.0 - k * k) / (3.0 * kk), -(1.0 + k * k) / (3.0 * kk), (2.0 * k * k - 1.0) / (3.0 * kk)};
  // e3 vanishes at k = 1/sqrt(2), so root errors are measured against e1, the largest root.
  const double scale = std::abs(lat.e(1));
  double worst = std::abs(lat.e(1) + lat.e(2) + lat.e(3)) / scale;
  for (int j = 1; j <= 3; ++j) {
    const double e = lat.e(j);
    worst = std::max(worst, std::abs(e - want[j - 1]) / scale);
    const double cubic = 4.0 * e * e * e - lat.g2() * e - lat.g3();
    worst = std::max(worst, std::abs(cubic) / std::max(1.0, std::abs(4.0 * e * e * e)));
  }
  const double g2 = 4.0 * (1.0 - k * k + k * k * k * k) / (3.0 * kk * kk);
  const double g3 = 4.0 * (k * k - 2.0) * (k * k + 1.0) * (2.0 * k * k - 1.0) / (27.0 * kk * kk * kk);
  worst = std::max(worst, rel(lat.g2(), g2));
  worst = std::max(worst, std::abs(lat.g3() - g3) / std::max(1.0, std::abs(g3)));
  worst = std::max(worst, std::abs(m.k2 + lat.e(3)) / std::max(1.0, std::abs(lat.e(3))));
  return worst;
}

double wp_ode_residual(const MonopoleModuli& m, const std::vector<cplx>& pts) {
  const RectLattice& lat = m.lattice;
  double worst = 0.0;
  for (const cplx u : pts) {
    const WpJet j = wp_jet(u, lat);
    const double scale = std::max(1.0, std::pow(std::abs(j.p), 3));
    worst = std::max(worst, std::abs(j.p1 * j.p1 - (4.0 * j.p * j.p * j.p - lat.g2() * j.p - lat.g3())) / scale);
    worst = std::max(worst, std::abs(j.p2 - (6.0 * j.p * j.p - 0.5 * lat.g2())) / std::max(1.0, std::norm(j.p)));
    worst = std::max(worst, std::abs(j.p3 - 12.0 * j.p * j.p1) / std::max(1.0, std::abs(j.p * j.p1)));
  }
  return worst;
}

double quadratic_identity_residual(const MonopoleModuli& m, const std::vector<cplx>& pts) {
  const RectLattice& lat = m.lattice;
  const double c1 = lat.root_gap(2, 3);
  const double c2 = lat.root_gap(3, 1);
  const double c3 = lat.root_gap(1, 2);
  double worst = 0.0;
  for (const cplx u : pts) {
    const auto f = f_roots(u, lat);
    const cplx a = c1 * f[0] * f[0];
    const cplx b = c2 * f[1] * f[1];
    const cplx c = c3 * f[2] * f[2];
    worst = std::max(worst, std::abs(a + b + c) / std::max({std::abs(a), std::abs(b), std::abs(c), 1.0}));
  }
  return worst;
}

double duplication_identity_residual(const MonopoleModuli& m, const std::vector<cplx>& pts) {
  const RectLattice& lat = m.lattice;
  const double k = m.k;
  const double kp = m.k_prime;
  double worst = 0.0;
  for (const cplx u : pts) {
    const WpJet j = wp_jet(u, lat);
    const auto f = f_roots(2.0 * u, lat);
    const cplx f3 = f_root(3, u, lat);
    const cplx x = f3 * f3;
    const double scale = std::max(1.0, std::norm(x));
    worst = std::max(worst, std::abs(1.0 + 2.0 * (kp / k) * x - x * x - j.p1 * f[0]) / scale);
    worst = std::max(worst, std::abs(-1.0 + 2.0 * (k / kp) * x + x * x + j.p1 * f[1]) / scale);
    worst = std::max(worst, std::abs(1.0 + x * x + j.p1 * f[2]) / scale);
  }
  return worst;
}

double uniformization_residual(const MonopoleModuli& m, const std::vector<cplx>& pts) {
  const double K2 = m.big_k * m.big_k;
  const double kk = m.k * m.k_prime;
  const double d = m.k * m.k - m.k_prime * m.k_prime;
  double worst = 0.0;
  for (const cplx u : pts) {
    const CurvePoint c = uniformize(u, m);
    const cplx rhs = K2 * c.zeta * (kk * (c.zeta * c.zeta - 1.0) + d * c.zeta);
    worst = std::max(worst, std::abs(c.eta * c.eta - rhs) / std::max(1.0, std::norm(c.eta)));
  }
  return worst;
}

double nullity_residual(const MonopoleModuli& m, const std::vector<cplx>& pts) {
  double worst = 0.0;
  for (const cplx u : pts) {
    const NullPoint p = phi_null(u, m);
    const cplx sum = p.dphi[0] * p.dphi[0] + p.dphi[1] * p.dphi[1] + p.dphi[2] * p.dphi[2];
    const double scale = std::max({std::norm(p.dphi[0]), std::norm(p.dphi[1]), std::norm(p.dphi[2])});
    worst = std::max(worst, std::abs(sum) / scale);
  }
  return worst;
}

double oracle_residual(const MonopoleModuli& m, const std::vector<cplx>& pts) {
  double worst = 0.0;
  for (const cplx u : pts) {
    const CVec3 omega = weierstrass_rep_oracle(u, m);
    const CVec3 phi = frame_transform(phi_null(u, m).phi, m, FrameDirection::to_standard);
    worst = std::max(worst, max_abs(omega - phi) / std::max(1.0, max_abs(phi)));
  }
  return worst;
}

double quarter_phi_residual(const MonopoleModuli& m) {
  const auto want = quarter_period_phi(m);
  const cplx pts[3] = {cplx{0.25 * m.lattice.omega1()}, 0.25 * m.lattice.omega2(), 0.25 * m.lattice.omega3()};
  double worst = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    const CVec3 got = phi_null(pts[j], m).phi;
    worst = std::max(worst, max_abs(got - want[j]) / std::max(1.0, max_abs(want[j])));
  }
  return worst;
}

double branch_point_residual(const MonopoleModuli& m) {
  const auto beta = branch_points(m);
  const cplx pts[3] = {cplx{0.25 * m.lattice.omega1()}, 0.25 * m.lattice.omega2(), 0.25 * m.lattice.omega3()};
  double worst = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    const Vec3 pos = real_part(phi_null(pts[j], m).phi);
    worst = std::max(worst, norm(pos - beta[j]) / std::max(1.0, norm(beta[j])));
  }
  return worst;
}

double quarter_density_residual(const MonopoleModuli& m) {
  const double k = m.k;
  const double kp = m.k_prime;
  const double want[3] = {4.0 * k / kp, 4.0 * kp / k, 4.0 / (k * kp)};
  const cplx pts[3] = {cplx{0.25 * m.lattice.omega1()}, 0.25 * m.lattice.omega2(), 0.25 * m.lattice.omega3()};
  double worst = 0.0;
  for (std::size_t j = 0; j < 3; ++j) worst = std::max(worst, rel(curvature_density(pts[j], m), want[j]));
  return worst;
}

double density_symmetry_residual(const MonopoleModuli& m, const std::vector<cplx>& pts) {
  const double w1 = m.lattice.omega1();
  const cplx w2 = m.lattice.omega2();
  auto G = [&](cplx u) { return curvature_density(u, m); };
  double worst = 0.0;
  for (const cplx p : pts) {
    // Offsets from the reflection lines; keep them inside the fundamental rectangle.
    const cplx u = p - cplx{0.5 * w1, 0.5 * w2.imag()};
    const cplx ub = std::conj(u);
    const double pairs[4][2] = {
        {G(0.25 * w1 - ub), G(0.25 * w1 + u)},
        {G(0.75 * w1 - ub), G(0.75 * w1 + u)},
        {G(0.25 * w2 + ub), G(0.25 * w2 + u)},
        {G(0.75 * w2 + ub), G(0.75 * w2 + u)},
    };
    for (const auto& pr : pairs) worst = std::max(worst, std::abs(pr[0] - pr[1]) / std::max(pr[1], 1e-300));
  }
  return worst;
}

double curvature_metric_residual(const MonopoleModuli& m, const std::vector<cplx>& pts) {
  double worst = 0.0;
  for (const cplx u : pts) {
    const SurfaceSample s = immerse(u, m);
    worst = std::max(worst, std::abs(s.gauss_curv * s.lambda + s.g_density) / s.g_density);
    worst = std::max(worst, std::abs(norm(s.normal) - 1.0));
  }
  return worst;
}

double total_curvature_residual(const MonopoleModuli& m, int grid_n) {
  return std::abs(total_curvature(m, grid_n) / (8.0 * pi) - 1.0);
}

double higgs_axis_residual(const GammaGraph& graph, const MonopoleModuli&) {
  double worst = 0.0;
  for (const auto& line : graph.higgs_polylines) {
    for (const auto& s : line) worst = std::max({worst, std::abs(s.pos[0]), std::abs(s.pos[2])});
  }
  return worst;
}

double star_plane_residual(const GammaGraph& graph, const MonopoleModuli&) {
  double worst = 0.0;
  for (const auto& s : graph.star_polyline) worst = std::max(worst, std::abs(s.pos[0]));
  return worst;
}

double star_vertex_residual(const MonopoleModuli& m) {
  const auto beta = branch_points(m);
  const Vec3 targets[4] = {beta[1], -beta[1], beta[2], -beta[2]};
  Vec3 vertices[4];
  for (int j = 0; j < 4; ++j) {
    const cplx u = 0.25 * m.lattice.omega2() + 0.25 * j * m.lattice.omega1();
    vertices[j] = immerse(u, m).pos;
  }
  // Symmetric Hausdorff distance between the two four-point sets.
  double worst = 0.0;
  for (int pass = 0; pass < 2; ++pass) {
    const Vec3* from = pass == 0 ? vertices : targets;
    const Vec3* to = pass == 0 ? targets : vertices;
    for (int a = 0; a < 4; ++a) {
      double best = std::numeric_limits<double>::infinity();
      for (int b = 0; b < 4; ++b) best = std::min(best, norm(from[a] - to[b]));
      worst = std::max(worst, best);
    }
  }
  return worst / m.big_k;
}

double higgs_monotone_residual(const MonopoleModuli& m, int samples) {
  if (samples < 8 || samples % 4 != 0) throw DomainError("higgs_monotone_residual: samples must be a positive multiple of 4");
  const double x = 0.25 * m.lattice.omega1();
  const double h = m.lattice.omega2_mag() / samples;
  double worst = 0.0;
  double prev = immerse(cplx{x, 0.0}, m).pos[1];
  for (int i = 1; i <= samples; ++i) {
    const double cur = immerse(cplx{x, i * h}, m).pos[1];
    // Quarters 0 and 2 descend from beta1 to beta3; quarters 1 and 3 climb back.
    const bool descending = ((i - 1) / (samples / 4)) % 2 == 0;
    const double wrong = descending ? cur - prev : prev - cur;
    worst = std::max(worst, wrong);
    prev = cur;
  }
  return std::max(worst, 0.0) / m.big_k;
}

double winding_residual(const MonopoleModuli& m, QuarterLine which, int samples) {
  return std::abs(winding_along_quarter_line(m, which, samples) - 2.0 * pi);
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass || c.informational; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out;
  out["passed"] = passed();
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json rec;
    rec["name"] = c.name;
    rec["k"] = c.k ? nlohmann::json(*c.k) : nlohmann::json(nullptr);
    rec["residual"] = std::isfinite(c.residual) ? nlohmann::json(c.residual) : nlohmann::json(nullptr);
    rec["tolerance"] = c.tolerance;
    rec["pass"] = c.pass;
    if (c.informational) rec["informational"] = true;
    if (!c.note.empty()) rec["note"] = c.note;
    out["checks"].push_back(std::move(rec));
  }
  return out;
}

VerificationReport run_verification(const std::vector<double>& k_list, const VerificationOptions& options) {
  std::vector<MonopoleModuli> moduli;
  moduli.reserve(k_list.size());
  for (const double k : k_list) moduli.push_back(moduli_from_k(k));

  VerificationReport report;
  auto record = [&](std::string name, std::optional<double> k, double residual, double tol) {
    const double t = options.tolerance.value_or(tol);
    report.checks.push_back({std::move(name), k, residual, t, residual <= t, false, {}});
  };

  for (const MonopoleModuli& m : moduli) {
    const double k = m.k;
    const auto pts = random_regular_points(m, options.random_points, options.seed);
    record("lattice_roots", k, lattice_roots_residual(m), 1e-10);
    record("quarter_period_values", k, quarter_values_residual(m), 1e-10);
    record("wp_ode", k, wp_ode_residual(m, pts), 1e-10);
    record("quadratic_identity", k, quadratic_identity_residual(m, pts), 1e-9);
    record("duplication_identities", k, duplication_identity_residual(m, pts), 1e-9);
    record("uniformization", k, uniformization_residual(m, pts), 1e-9);
    record("nullity", k, nullity_residual(m, pts), 1e-9);
    record("oracle_equivalence", k, oracle_residual(m, pts), 1e-8);
    record("quarter_period_phi", k, quarter_phi_residual(m), 1e-9);
    record("branch_points", k, branch_point_residual(m), 1e-9);
    record("quarter_period_density", k, quarter_density_residual(m), 1e-9);
    record("density_symmetry", k, density_symmetry_residual(m, pts), 1e-9);
    record("curvature_metric", k, curvature_metric_residual(m, pts), 1e-9);
    record("total_curvature", k, total_curvature_residual(m, options.curvature_grid), 1e-3);
    const GammaGraph graph = gamma_graph(m, 64);
    record("gamma_higgs_axis", k, higgs_axis_residual(graph, m), 1e-8);
    record("gamma_star_plane", k, star_plane_residual(graph, m), 1e-8);
    record("gamma_star_vertices", k, star_vertex_residual(m), 1e-9);
    record("higgs_monotone", k, higgs_monotone_residual(m, 256), 0.0);
    record("winding_vertical", k, winding_residual(m, QuarterLine::vertical, 1024), 1e-6);
    record("winding_horizontal", k, winding_residual(m, QuarterLine::horizontal, 1024), 1e-6);
  }

  if (!moduli.empty()) {
    const double k0 = turning_modulus();
    const double big_k = complete_elliptic_k(k0);
    record("turning_modulus", k0, std::abs(k0 * elliptic_k_derivative(k0) - big_k) / big_k, 1e-8);
    CheckRecord info;
    info.name = "turning_modulus_below_inv_sqrt2";
    info.k = k0;
    info.residual = k0 - 1.0 / std::numbers::sqrt2;
    info.tolerance = 0.0;
    info.pass = info.residual < 0.0;
    info.informational = true;
    info.note = "k0 - 1/sqrt(2); recorded only";
    report.checks.push_back(std::move(info));
  }
  return report;
}

}  // namespace monosurf
