#include "monosurf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace monosurf {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

std::vector<SurfaceSample> sample_line(const MonopoleModuli& m, cplx start, cplx step, int count) {
  std::vector<SurfaceSample> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  for (int i = 0; i <= count; ++i) out.push_back(immerse(start + static_cast<double>(i) * step, m));
  return out;
}

// sigma_x(zeta) = x . h(zeta), h(zeta) = (1 - zeta^2, i(1 + zeta^2), -2 zeta).
CVec3 section_coefficients(cplx zeta) {
  const cplx z2 = zeta * zeta;
  return {1.0 - z2, I * (1.0 + z2), -2.0 * zeta};
}

}  // namespace

std::array<Vec3, 3> branch_points(const MonopoleModuli& m) {
  const double k = m.k;
  const double K = m.big_k;
  return {Vec3{0.0, K / (2.0 * k), 0.0}, Vec3{0.0, 0.0, k * k * K / (2.0 * m.k_prime)},
          Vec3{0.0, k * k * K / 2.0, 0.0}};
}

std::array<CVec3, 3> quarter_period_phi(const MonopoleModuli& m) {
  const double k = m.k;
  const double kp = m.k_prime;
  const double K = m.big_k;
  const double a = K / (2.0 * k);
  const double b = K / (2.0 * kp);
  const double c = K / 2.0;
  return {CVec3{0.0, a, -I * a * kp * kp}, CVec3{-I * b, 0.0, b * k * k},
          CVec3{-I * c * kp * kp, c * k * k, 0.0}};
}

double total_curvature(const MonopoleModuli& m, int grid_n) {
  if (grid_n < 64) throw DomainError("total_curvature: grid_n must be at least 64");
  const double hx = m.lattice.omega1() / grid_n;
  const double hy = m.lattice.omega2_mag() / grid_n;
  double sum = 0.0;
  for (int j = 0; j < grid_n; ++j) {
    const double y = (j + 0.5) * hy;
    double row = 0.0;
    for (int i = 0; i < grid_n; ++i) row += curvature_density(cplx{(i + 0.5) * hx, y}, m);
    sum += row;
  }
  return sum * hx * hy;
}

GammaGraph gamma_graph(const MonopoleModuli& m, int samples_per_segment) {
  if (samples_per_segment < 16) throw DomainError("gamma_graph: need at least 16 samples per segment");
  const double w1 = m.lattice.omega1();
  const cplx w2 = m.lattice.omega2();
  const int count = 4 * samples_per_segment;

  GammaGraph graph;
  graph.star_polyline = sample_line(m, 0.25 * w2, cplx{w1 / count}, count);
  graph.higgs_polylines[0] = sample_line(m, cplx{0.25 * w1}, w2 / static_cast<double>(count), count);
  graph.higgs_polylines[1] = sample_line(m, cplx{0.75 * w1}, w2 / static_cast<double>(count), count);
  const auto beta = branch_points(m);
  for (std::size_t j = 0; j < 3; ++j) {
    graph.branch_pts[2 * j] = beta[j];
    graph.branch_pts[2 * j + 1] = -beta[j];
  }
  return graph;
}

double star_slope(cplx u, const MonopoleModuli& m) {
  const NullPoint p = phi_null(u, m);
  return p.dphi[2].real() / p.dphi[1].real();
}

double star_slope_closed_form(cplx u, const MonopoleModuli& m) {
  // e3 - wp(2u) = -f3(2u)^2 and wp(2u) - e2 = f2(2u)^2, both real on this segment.
  const auto f = f_roots(2.0 * u, m.lattice);
  return -std::sqrt(-(f[2] * f[2]).real() / (f[1] * f[1]).real()) / m.k_prime;
}

double winding_along_quarter_line(const MonopoleModuli& m, QuarterLine which, int samples) {
  if (samples < 256) throw DomainError("winding_along_quarter_line: need at least 256 samples");
  const bool vertical = which == QuarterLine::vertical;
  const cplx start = vertical ? cplx{0.25 * m.lattice.omega1()} : 0.25 * m.lattice.omega2();
  const cplx period = vertical ? m.lattice.omega2() : cplx{m.lattice.omega1()};
  // V_{1/4}: normal in the (e1, e3) plane. H_{1/4}: the (e2, e3) plane.
  const std::size_t axis = vertical ? 0 : 1;

  auto angle_at = [&](int i) {
    const Vec3 n = gauss_sphere(start + period * (static_cast<double>(i) / samples), m);
    return std::atan2(n[2], n[axis]);
  };
  double total = 0.0;
  double prev = angle_at(0);
  for (int i = 1; i <= samples; ++i) {
    const double cur = angle_at(i);
    double delta = cur - prev;
    delta -= 2.0 * pi * std::round(delta / (2.0 * pi));
    if (std::abs(delta) > 0.5 * pi) {
      throw SamplingError("winding_along_quarter_line: normal turned by more than pi/2 between samples");
    }
    total += delta;
    prev = cur;
  }
  return total;
}

OrientedLine spectral_line(cplx zeta, cplx eta) {
  // h is null, so Re h and Im h are orthogonal of equal length and both are
  // perpendicular to the direction P^-1(zeta).
  const CVec3 h = section_coefficients(zeta);
  const double h2 = std::norm(h[0]) + std::norm(h[1]) + std::norm(h[2]);
  Vec3 point;
  for (std::size_t i = 0; i < 3; ++i) point[i] = 2.0 * (std::conj(eta) * h[i]).real() / h2;
  return {point, inverse_stereographic({zeta, false})};
}

double incidence_residual(const Vec3& x, cplx zeta, cplx eta) {
  const CVec3 h = section_coefficients(zeta);
  return std::abs(eta - (x[0] * h[0] + x[1] * h[1] + x[2] * h[2]));
}

double line_distance(const OrientedLine& a, const OrientedLine& b) {
  const Vec3 c = cross(a.direction, b.direction);
  const Vec3 diff = b.point - a.point;
  const double cn = norm(c);
  if (cn < 1e-12) return norm(diff - dot(diff, a.direction) * a.direction);
  return std::abs(dot(diff, c)) / cn;
}

OrientedLine normal_line(cplx u, const MonopoleModuli& m) {
  const SurfaceSample s = immerse(u, m);
  const Vec3 p = frame_transform(s.pos, m, FrameDirection::to_standard);
  Vec3 d = frame_transform(s.normal, m, FrameDirection::to_standard);
  d = (1.0 / norm(d)) * d;
  return {p - dot(p, d) * d, d};
}

double normal_line_spectral_distance(cplx u, const MonopoleModuli& m) {
  OrientedLine line = normal_line(u, m);
  // Reversing the direction keeps zeta in the closed unit disc.
  if (line.direction[2] < 0.0) line.direction = -line.direction;
  const cplx zeta = stereographic(line.direction).value;
  double best = std::numeric_limits<double>::infinity();
  for (const cplx eta : spectral_eta(zeta, m)) {
    best = std::min(best, line_distance(line, spectral_line(zeta, eta)));
  }
  return best / m.big_k;
}

std::vector<double> higgs_normal_diagnostic(const MonopoleModuli& m, int samples) {
  if (samples < 32) throw DomainError("higgs_normal_diagnostic: need at least 32 samples");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(samples));
  const double w1 = m.lattice.omega1();
  const double w2 = m.lattice.omega2_mag();
  for (int i = 0; i < samples; ++i) {
    const cplx u{0.25 * w1, w2 * (i + 0.5) / samples};
    out.push_back(normal_line_spectral_distance(u, m));
  }
  return out;
}

double turning_residual(double k) {
  const double kp2 = (1.0 - k) * (1.0 + k);
  return complete_elliptic_e(k) / kp2 - 2.0 * complete_elliptic_k(k);
}

double elliptic_k_derivative(double k) {
  const double kp2 = (1.0 - k) * (1.0 + k);
  return complete_elliptic_e(k) / (k * kp2) - complete_elliptic_k(k) / k;
}

double turning_modulus() {
  double lo = 0.1;
  double hi = 0.99;
  double r_lo = turning_residual(lo);
  for (int i = 0; i < 200 && hi - lo > 4e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double r = turning_residual(mid);
    if (r == 0.0) return mid;
    if ((r < 0.0) == (r_lo < 0.0)) {
      lo = mid;
      r_lo = r;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double vertical_density_min(const MonopoleModuli& m, int samples) {
  const double w1 = m.lattice.omega1();
  const double w2 = m.lattice.omega2_mag();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const cplx u{0.25 * w1, w2 * i / samples};
    best = std::min(best, w1 * w1 * curvature_density(u, m));
  }
  return best;
}

double horizontal_density_max_off_line(const MonopoleModuli& m, int samples) {
  const double w1 = m.lattice.omega1();
  const double w2 = m.lattice.omega2_mag();
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const cplx u{w1 * i / samples, 0.125 * w2};
    best = std::max(best, w2 * w2 * curvature_density(u, m));
  }
  return best;
}

}  // namespace monosurf
