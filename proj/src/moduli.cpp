#include "monosurf/moduli.hpp"

#include <cmath>
#include <string>

namespace monosurf {

namespace {

RectLattice lattice_for(double k, double kp, double big_k, double big_kp) {
  const double root = std::sqrt(k * kp);
  return RectLattice(2.0 * root * big_k, 2.0 * root * big_kp);
}

}  // namespace

MonopoleModuli moduli_from_k(double k, ModulusBounds bounds) {
  if (!(k >= bounds.lo && k <= bounds.hi)) {
    throw DomainError("moduli_from_k: k = " + std::to_string(k) + " outside [" +
                      std::to_string(bounds.lo) + ", " + std::to_string(bounds.hi) + "]");
  }
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const double big_k = complete_elliptic_k(k);
  const double big_kp = complete_elliptic_k_prime(k);
  const double r1 = k * kp * big_k * big_k;
  return MonopoleModuli{
      .k = k,
      .k_prime = kp,
      .theta = std::asin(k),
      .big_k = big_k,
      .big_k_prime = big_kp,
      .lattice = lattice_for(k, kp, big_k, big_kp),
      .r1 = r1,
      .r2 = (kp - k) * (kp + k) * big_k * big_k,
      .k1 = 0.5 * std::sqrt(r1),
      .k2 = (1.0 - 2.0 * k * k) / (3.0 * k * kp),
  };
}

std::array<cplx, 2> spectral_eta(cplx zeta, const MonopoleModuli& m) {
  const double kk = m.k * m.k_prime;
  const double lin = (m.k - m.k_prime) * (m.k + m.k_prime);
  const cplx rhs = m.big_k * m.big_k * zeta * (kk * (zeta * zeta - 1.0) + lin * zeta);
  const cplx root = std::sqrt(rhs);
  return {root, -root};
}

CurvePoint uniformize(cplx u, const MonopoleModuli& m) {
  const WpJet jet = wp_jet(u, m.lattice);
  // wp - e3 as f3^2 avoids cancellation when wp is close to e3.
  const cplx f3 = f_root(3, u, m.lattice);
  return {f3 * f3, 0.25 * m.lattice.omega1() * jet.p1};
}

std::array<double, 2> finite_branch_values(const MonopoleModuli& m) {
  return {-m.k / m.k_prime, m.k_prime / m.k};
}

}  // namespace monosurf
