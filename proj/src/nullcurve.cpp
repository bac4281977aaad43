#include "monosurf/nullcurve.hpp"

#include <cmath>
#include <limits>

namespace monosurf {

namespace {

constexpr cplx I{0.0, 1.0};

std::array<cplx, 3> roots_at_double(cplx u, const MonopoleModuli& m) {
  const cplx z = 2.0 * u;
  if (m.lattice.distance_to_lattice(z) < kPoleExclusion * m.lattice.omega1()) {
    throw EndProximityError("parameter lies on an end of the surface (2u on the lattice)");
  }
  return f_roots(z, m.lattice, 0.0);
}

// f3^2 = (k' f2 + i k f1)(k' f2 - i k f1), so g = -(k' f2 + i k f1) / f3
// = -f3 / (k' f2 - i k f1). Dividing by the larger factor keeps the removable
// 0/0 at 2u = omega3/2 regular. The f_j may share any common scale.
ExtendedComplex gauss_from_roots(const std::array<cplx, 3>& f, double k, double kp) {
  const cplx plus = kp * f[1] + I * k * f[0];
  const cplx minus = kp * f[1] - I * k * f[0];
  if (std::abs(plus) <= std::abs(minus)) return {-f[2] / minus, false};
  if (f[2] == 0.0) return {{}, true};
  return {-plus / f[2], false};
}

// D = k^2 |f1|^2 + k'^2 |f2|^2 + |f3|^2, with |wp - e_j| = |f_j|^2.
double d_sum(const std::array<cplx, 3>& f, double k, double kp) {
  return k * k * std::norm(f[0]) + kp * kp * std::norm(f[1]) + std::norm(f[2]);
}

}  // namespace

NullPoint phi_null(cplx u, const MonopoleModuli& m) {
  const auto f = roots_at_double(u, m);
  const double q = 0.25 * m.lattice.omega1();
  const cplx wp1 = -2.0 * f[0] * f[1] * f[2];  // wp'(2u)
  NullPoint pt;
  pt.u = u;
  pt.phi = {-m.k * q * f[0] * f[0] * f[0], m.k_prime * q * f[1] * f[1] * f[1],
            -I * q * f[2] * f[2] * f[2]};
  const double c = 0.75 * m.lattice.omega1();
  pt.dphi = {-c * m.k * wp1 * f[0], c * m.k_prime * wp1 * f[1], -I * c * wp1 * f[2]};
  return pt;
}

CVec3 frame_transform(const CVec3& v, const MonopoleModuli& m, FrameDirection direction) {
  const double k = m.k;
  const double kp = m.k_prime;
  // Rows of A_k: (-k, 0, k'), (k', 0, k), (0, 1, 0). A_k is orthogonal.
  if (direction == FrameDirection::to_monopole) {
    return {-k * v[0] + kp * v[2], kp * v[0] + k * v[2], v[1]};
  }
  return {-k * v[0] + kp * v[1], v[2], kp * v[0] + k * v[1]};
}

Vec3 frame_transform(const Vec3& v, const MonopoleModuli& m, FrameDirection direction) {
  const CVec3 c = frame_transform(CVec3{v[0], v[1], v[2]}, m, direction);
  return real_part(c);
}

RepresentationData representation_data(cplx u, const MonopoleModuli& m) {
  const RectLattice& lat = m.lattice;
  for (const cplx half : {cplx{0.5 * lat.omega1()}, 0.5 * lat.omega2(), 0.5 * lat.omega3()}) {
    if (lat.distance_to_lattice(u - half) < kPoleExclusion * lat.omega1()) {
      throw DegeneratePointError("representation formulae undefined where wp'(u) = 0");
    }
  }
  const WpJet j = wp_jet(u, lat);
  const cplx p4 = 12.0 * (j.p1 * j.p1 + j.p * j.p2);
  const double q = 0.25 * lat.omega1();
  const cplx p1_2 = j.p1 * j.p1;
  const cplx p1_3 = p1_2 * j.p1;
  const cplx w = j.p3 * j.p1 - j.p2 * j.p2;

  RepresentationData d;
  const cplx f3 = f_root(3, u, lat);
  d.g = f3 * f3;
  d.f = q * j.p1;
  d.df_dg = q * j.p2 / j.p1;
  d.d2f_dg2 = q * w / p1_3;
  d.d3f_dg3 = q * ((p4 * j.p1 - j.p2 * j.p3) * j.p1 - 3.0 * j.p2 * w) / (p1_3 * p1_2);
  return d;
}

CVec3 weierstrass_rep_oracle(cplx u, const MonopoleModuli& m) {
  const RepresentationData d = representation_data(u, m);
  const cplx g2 = d.g * d.g;
  return {0.5 * (-0.5 * (1.0 - g2) * d.d2f_dg2 - d.g * d.df_dg + d.f),
          0.5 * I * (-0.5 * (1.0 + g2) * d.d2f_dg2 + d.g * d.df_dg - d.f),
          0.5 * (d.g * d.d2f_dg2 - d.df_dg)};
}

ExtendedComplex gauss_map(cplx u, const MonopoleModuli& m) {
  const auto rq = m.lattice.root_quotients(2.0 * u);
  return gauss_from_roots(rq.num, m.k, m.k_prime);
}

ExtendedComplex gauss_map_derivative(cplx u, const MonopoleModuli& m) {
  const auto rq = m.lattice.root_quotients(2.0 * u);
  const auto& n = rq.num;
  const cplx plus = m.k_prime * n[1] + I * m.k * n[0];
  const cplx minus = m.k_prime * n[1] - I * m.k * n[0];
  // -2i g / f3 with f3 = n3 / den, using the same branch as gauss_from_roots.
  if (std::abs(plus) <= std::abs(minus)) return {2.0 * I * rq.den / minus, false};
  if (n[2] == 0.0) return {{}, true};
  return {2.0 * I * plus * rq.den / (n[2] * n[2]), false};
}

Vec3 inverse_stereographic(const ExtendedComplex& g) {
  if (g.infinite) return {0.0, 0.0, -1.0};
  const double a = std::norm(g.value);
  if (a <= 1.0) {
    return {2.0 * g.value.real() / (1.0 + a), 2.0 * g.value.imag() / (1.0 + a), (1.0 - a) / (1.0 + a)};
  }
  // Write g = 1/w to stay bounded for large |g|.
  const cplx w = 1.0 / g.value;
  const double b = std::norm(w);
  return {2.0 * w.real() / (1.0 + b), -2.0 * w.imag() / (1.0 + b), (b - 1.0) / (1.0 + b)};
}

ExtendedComplex stereographic(const Vec3& x) {
  const double den = 1.0 + x[2];
  if (den == 0.0) return {{}, true};
  return {cplx{x[0], x[1]} / den, false};
}

Vec3 gauss_sphere(cplx u, const MonopoleModuli& m) { return inverse_stereographic(gauss_map(u, m)); }

double curvature_density(cplx u, const MonopoleModuli& m) {
  const auto rq = m.lattice.root_quotients(2.0 * u);
  const double k = m.k;
  const double kp = m.k_prime;
  const double d =
      k * k * std::norm(rq.num[0]) + kp * kp * std::norm(rq.num[1]) + std::norm(rq.num[2]);
  return 8.0 * std::norm(rq.den) / d;
}

SurfaceSample immerse(cplx u, const MonopoleModuli& m) {
  const auto f = roots_at_double(u, m);
  const double q = 0.25 * m.lattice.omega1();
  const double w1 = m.lattice.omega1();
  const cplx wp1 = -2.0 * f[0] * f[1] * f[2];
  const double d = d_sum(f, m.k, m.k_prime);

  SurfaceSample s;
  s.u = u;
  s.pos = {(-m.k * q * f[0] * f[0] * f[0]).real(), (m.k_prime * q * f[1] * f[1] * f[1]).real(),
           (-I * q * f[2] * f[2] * f[2]).real()};
  s.normal = inverse_stereographic(gauss_from_roots(f, m.k, m.k_prime));
  // Metric induced by phi: |Phi'|^2 / 2 = (9/32) w1^2 |wp'(2u)|^2 D.
  s.lambda = 9.0 / 32.0 * w1 * w1 * std::norm(wp1) * d;
  s.g_density = 8.0 / d;
  s.gauss_curv = s.lambda > 0.0 ? -s.g_density / s.lambda
                                : -std::numeric_limits<double>::infinity();
  return s;
}

}  // namespace monosurf
