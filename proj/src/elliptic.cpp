#include "monosurf/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace monosurf {

namespace {

constexpr double pi = std::numbers::pi;

// Theta functions theta_1..theta_4(v | q) with q = exp(-a).
struct ThetaValues {
  cplx t1, t2, t3, t4;
};

ThetaValues theta_all(cplx v, double a) {
  const double y = std::abs(v.imag());
  cplx t1{0.0}, t2{0.0}, t3{1.0}, t4{1.0};
  double peak = 1.0;
  for (int n = 0; n < 400; ++n) {
    const double h = n + 0.5;
    const double m = n + 1.0;
    // Magnitude bounds of the next half-integer and integer terms.
    const double bound_h = std::exp(-a * h * h + 2.0 * h * y);
    const double bound_m = std::exp(-a * m * m + 2.0 * m * y);
    if (n > 0 && std::max(bound_h, bound_m) < 1e-18 * peak) break;
    peak = std::max({peak, bound_h, bound_m});

    const double qh = std::exp(-a * h * h);
    const cplx odd_arg = (2.0 * n + 1.0) * v;
    const double sgn_h = (n % 2 == 0) ? 1.0 : -1.0;
    t1 += 2.0 * sgn_h * qh * std::sin(odd_arg);
    t2 += 2.0 * qh * std::cos(odd_arg);

    const double qm = std::exp(-a * m * m);
    const cplx c = std::cos(2.0 * m * v);
    const double sgn_m = (static_cast<long>(m) % 2 == 0) ? 1.0 : -1.0;
    t3 += 2.0 * qm * c;
    t4 += 2.0 * sgn_m * qm * c;
  }
  return {t1, t2, t3, t4};
}

struct Reduced {
  cplx z;
  long m;  // multiples of omega1 removed
  long n;  // multiples of omega2 removed
};

Reduced reduce(cplx u, double omega1, double omega2_mag) {
  const double m = std::round(u.real() / omega1);
  const double n = std::round(u.imag() / omega2_mag);
  return {cplx{u.real() - m * omega1, u.imag() - n * omega2_mag},
          static_cast<long>(m), static_cast<long>(n)};
}

double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return a;
}

double parity(long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double complete_elliptic_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("complete_elliptic_k: modulus must satisfy 0 <= k < 1, got " +
                      std::to_string(k));
  }
  return pi / (2.0 * agm(1.0, std::sqrt((1.0 - k) * (1.0 + k))));
}

double complete_elliptic_k_prime(double k) {
  if (!(k > 0.0 && k <= 1.0)) {
    throw DomainError("complete_elliptic_k_prime: modulus must satisfy 0 < k <= 1, got " +
                      std::to_string(k));
  }
  return pi / (2.0 * agm(1.0, k));
}

double complete_elliptic_e(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("complete_elliptic_e: modulus must satisfy 0 <= k <= 1, got " +
                      std::to_string(k));
  }
  if (k == 1.0) return 1.0;
  // E = K * (1 - sum_n 2^(n-1) c_n^2), c_0 = k.
  // c_{n+1} = c_n^2 / (4 a_{n+1}) avoids forming a_n - b_n.
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  double c = k;
  double sum = 0.5 * k * k;
  double weight = 0.5;
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    c = c * c / (4.0 * an);
    b = std::sqrt(a * b);
    a = an;
    weight *= 2.0;
    sum += weight * c * c;
    if (std::abs(c) <= 1e-17 * a) break;
  }
  return pi / (2.0 * a) * (1.0 - sum);
}

RectLattice::RectLattice(double omega1, double omega2_mag)
    : omega1_(omega1), omega2_mag_(omega2_mag) {
  if (!(omega1 > 0.0) || !(omega2_mag > 0.0) || !std::isfinite(omega1) ||
      !std::isfinite(omega2_mag)) {
    throw DomainError("RectLattice: periods must be positive and finite");
  }
  const double a = pi * omega2_mag_ / omega1_;
  q_ = std::exp(-a);
  const ThetaValues zero = theta_all(cplx{0.0}, a);
  th2_ = zero.t2.real();
  th3_ = zero.t3.real();
  th4_ = zero.t4.real();

  const double s2 = (pi / omega1_) * (pi / omega1_);
  const double t2 = std::pow(th2_, 4);
  const double t3 = std::pow(th3_, 4);
  const double t4 = std::pow(th4_, 4);
  // Jacobi: theta_3^4 = theta_2^4 + theta_4^4.
  e_ = {s2 * (t3 + t4) / 3.0, -s2 * (t3 + t2) / 3.0, s2 * (t2 - t4) / 3.0};
  gap12_ = s2 * t3;
  gap13_ = s2 * t4;
  gap32_ = s2 * t2;
  g2_ = 2.0 * (e_[0] * e_[0] + e_[1] * e_[1] + e_[2] * e_[2]);
  g3_ = 4.0 * e_[0] * e_[1] * e_[2];
}

double RectLattice::e(int j) const {
  if (j < 1 || j > 3) throw DomainError("RectLattice::e: index must be 1, 2 or 3");
  return e_[static_cast<std::size_t>(j - 1)];
}

double RectLattice::root_gap(int i, int j) const {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw DomainError("RectLattice::root_gap: indices must be 1, 2 or 3");
  if (i == j) return 0.0;
  const double sign = i < j ? 1.0 : -1.0;
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  if (lo == 1 && hi == 2) return sign * gap12_;
  if (lo == 1 && hi == 3) return sign * gap13_;
  return -sign * gap32_;  // e2 - e3 = -(e3 - e2)
}

double RectLattice::distance_to_lattice(cplx u) const {
  return std::abs(reduce(u, omega1_, omega2_mag_).z);
}

RectLattice::RootQuotients RectLattice::root_quotients(cplx u) const {
  const Reduced r = reduce(u, omega1_, omega2_mag_);
  const double a = pi * omega2_mag_ / omega1_;
  const ThetaValues th = theta_all(pi * r.z / omega1_, a);
  const double scale = pi / omega1_;
  // theta_1'(0) = theta_2 theta_3 theta_4 splits the residue normalisation.
  // Translation characters: f1 flips under omega2, f2 under omega1, f3 under both.
  const double s1 = parity(r.n);
  const double s2 = parity(r.m);
  const double s3 = parity(r.m + r.n);
  return {{s1 * scale * th3_ * th4_ * th.t2,
           s2 * scale * th2_ * th3_ * th.t4,
           s3 * scale * th2_ * th4_ * th.t3},
          th.t1};
}

std::array<cplx, 3> f_roots(cplx u, const RectLattice& lattice, double eps_rel) {
  if (lattice.distance_to_lattice(u) < eps_rel * lattice.omega1()) {
    throw PoleProximityError("f_roots: argument within pole-exclusion radius of a lattice point");
  }
  const auto rq = lattice.root_quotients(u);
  return {rq.num[0] / rq.den, rq.num[1] / rq.den, rq.num[2] / rq.den};
}

cplx f_root(int j, cplx u, const RectLattice& lattice, double eps_rel) {
  if (j < 1 || j > 3) throw DomainError("f_root: index must be 1, 2 or 3");
  return f_roots(u, lattice, eps_rel)[static_cast<std::size_t>(j - 1)];
}

WpJet wp_jet(cplx u, const RectLattice& lattice, double eps_rel) {
  if (lattice.distance_to_lattice(u) < eps_rel * lattice.omega1()) {
    throw PoleProximityError("wp_jet: argument within pole-exclusion radius of a lattice point");
  }
  const auto f = f_roots(u, lattice, 0.0);
  const cplx s1 = f[0] * f[0];
  const cplx s2 = f[1] * f[1];
  const cplx s3 = f[2] * f[2];
  WpJet jet;
  // e1 + e2 + e3 = 0, so the mean of e_j + f_j^2 is the mean of f_j^2.
  jet.p = (s1 + s2 + s3) / 3.0;
  jet.p1 = -2.0 * f[0] * f[1] * f[2];
  // f_j' = -f1 f2 f3 / f_j.
  jet.p2 = 2.0 * (s1 * s2 + s1 * s3 + s2 * s3);
  jet.p3 = 12.0 * jet.p * jet.p1;
  return jet;
}

}  // namespace monosurf
