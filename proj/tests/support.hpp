#pragma once

// Independent reference computations and small generators shared by the tests.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "monosurf/moduli.hpp"

namespace testsupport {

using monosurf::cplx;
constexpr double pi = std::numbers::pi;

/// K(k) by adaptive Gauss-Kronrod on the defining integral.
inline double quad_k(double k) {
  auto f = [k](double t) {
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - k * k * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, pi / 2, 20, 1e-15);
}

/// E(k) by adaptive Gauss-Kronrod on the defining integral.
inline double quad_e(double k) {
  auto f = [k](double t) {
    const double s = std::sin(t);
    return std::sqrt(std::max(0.0, 1.0 - k * k * s * s));
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, pi / 2, 20, 1e-15);
}

/// Closed-form invariants of the lattice attached to k.
struct Invariants {
  double g2, g3, e1, e2, e3;
};

inline Invariants invariants(double k) {
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const double kk = k * kp;
  return {4.0 * (1.0 - k * k + k * k * k * k) / (3.0 * kk * kk),
          4.0 * (k * k - 2.0) * (k * k + 1.0) * (2.0 * k * k - 1.0) / (27.0 * kk * kk * kk),
          (2.0 - k * k) / (3.0 * kk), -(1.0 + k * k) / (3.0 * kk), (2.0 * k * k - 1.0) / (3.0 * kk)};
}

struct Jet {
  cplx p, p1, p2, p3;
};

/// wp from its Laurent series at u / 2^m, then m argument doublings
///   wp(2z) = R^2/4 - 2 wp(z),  wp'(2z) = R (12 wp - R^2)/4 - wp'(z),  R = wp''/wp'.
/// `radius` bounds |u / 2^m|; it should stay well inside the distance to the
/// nearest nonzero lattice point.
inline Jet laurent_jet(cplx u_in, double g2_in, double g3_in, double radius) {
  // Extended precision keeps the doubling steps from eating the comparison budget.
  using L = long double;
  using C = std::complex<L>;
  const L g2 = g2_in;
  const L g3 = g3_in;
  int m = 0;
  C z{u_in.real(), u_in.imag()};
  while (std::abs(z) > radius) {
    z *= L(0.5);
    ++m;
  }
  constexpr int terms = 60;
  std::vector<L> c(terms + 1, 0.0L);
  c[2] = g2 / 20.0L;
  c[3] = g3 / 28.0L;
  for (int n = 4; n <= terms; ++n) {
    L s = 0.0L;
    for (int j = 2; j <= n - 2; ++j) s += c[j] * c[n - j];
    c[n] = 3.0L * s / ((2.0L * n + 1.0L) * (n - 3.0L));
  }
  const C z2 = z * z;
  C p = L(1) / z2;
  C p1 = L(-2) / (z2 * z);
  C p2 = L(6) / (z2 * z2);
  C pw = L(1);  // z^(2n-4)
  for (int n = 2; n <= terms; ++n) {
    p += c[n] * pw * z2;
    p1 += (2.0L * n - 2.0L) * c[n] * pw * z;
    p2 += (2.0L * n - 2.0L) * (2.0L * n - 3.0L) * c[n] * pw;
    pw *= z2;
  }
  for (int i = 0; i < m; ++i) {
    const C r = p2 / p1;
    const C np = L(0.25) * r * r - L(2) * p;
    const C np1 = L(0.25) * r * (L(12) * p - r * r) - p1;
    p = np;
    p1 = np1;
    p2 = L(6) * p * p - L(0.5) * g2;
  }
  const C p3 = L(12) * p * p1;
  auto d = [](C v) { return cplx{static_cast<double>(v.real()), static_cast<double>(v.imag())}; };
  return {d(p), d(p1), d(p2), d(p3)};
}

inline Jet laurent_jet(cplx u, const monosurf::MonopoleModuli& m) {
  const Invariants inv = invariants(m.k);
  const double radius = 0.2 * std::min(m.lattice.omega1(), m.lattice.omega2_mag());
  return laurent_jet(u, inv.g2, inv.g3, radius);
}

/// Relative difference with a floor on the scale.
inline double rel(cplx got, cplx want, double floor = 1e-300) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

/// Small deterministic generator (splitmix64) for hand-rolled property tests.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t state_;
};

/// Points of the fundamental rectangle whose distance from the half-lattice
/// (ends and half periods, in u and in 2u) is at least margin * omega1.
inline std::vector<cplx> regular_points(const monosurf::MonopoleModuli& m, std::size_t count,
                                        std::uint64_t seed, double margin = 0.05) {
  const auto& lat = m.lattice;
  Rng rng(seed);
  const double r = margin * lat.omega1();
  auto far = [&](cplx v, double rad) {
    const cplx halves[4] = {0.0, cplx{0.5 * lat.omega1()}, 0.5 * lat.omega2(), 0.5 * lat.omega3()};
    for (const cplx h : halves) {
      if (lat.distance_to_lattice(v - h) < rad) return false;
    }
    return true;
  };
  std::vector<cplx> out;
  while (out.size() < count) {
    const cplx u{rng.uniform(0.0, lat.omega1()), rng.uniform(0.0, lat.omega2_mag())};
    if (far(u, r) && far(2.0 * u, 2.0 * r)) out.push_back(u);
  }
  return out;
}

}  // namespace testsupport
