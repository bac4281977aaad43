#include <doctest.h>

#include <cmath>

#include "monosurf/moduli.hpp"
#include "support.hpp"

using namespace monosurf;
using testsupport::rel;

TEST_SUITE_BEGIN("moduli");

TEST_CASE("square lattice at k = 1/sqrt(2)") {
  const MonopoleModuli m = moduli_from_k(1.0 / std::sqrt(2.0));
  const RectLattice& L = m.lattice;
  CHECK(std::abs(L.e(1) - 1.0) < 1e-12);
  CHECK(std::abs(L.e(2) + 1.0) < 1e-12);
  CHECK(std::abs(L.e(3)) < 1e-12);
  CHECK(std::abs(L.g2() - 4.0) < 1e-12);
  CHECK(std::abs(L.g3()) < 1e-12);
  CHECK(rel(L.omega1(), L.omega2_mag()) < 1e-14);
  CHECK(std::abs(m.r2) < 1e-12);
  CHECK(std::abs(m.k2) < 1e-12);
}

TEST_CASE("derived constants obey their defining relations") {
  testsupport::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const double k = rng.uniform(1e-4, 1.0 - 1e-4);
    CAPTURE(k);
    const MonopoleModuli m = moduli_from_k(k);
    const auto inv = testsupport::invariants(k);
    REQUIRE(std::abs(k * k + m.k_prime * m.k_prime - 1.0) < 1e-15);
    REQUIRE(std::abs(std::sin(m.theta) - k) < 1e-15);
    REQUIRE(rel(m.big_k, testsupport::quad_k(k)) < 1e-12);
    REQUIRE(rel(m.lattice.omega1(), 2.0 * std::sqrt(k * m.k_prime) * m.big_k) < 1e-15);
    REQUIRE(rel(m.lattice.omega2_mag(), 2.0 * std::sqrt(k * m.k_prime) * m.big_k_prime) < 1e-15);
    REQUIRE(rel(m.r1, k * m.k_prime * m.big_k * m.big_k) < 1e-15);
    REQUIRE(std::abs(m.r2 - (m.k_prime * m.k_prime - k * k) * m.big_k * m.big_k) <
            1e-14 * m.big_k * m.big_k);
    REQUIRE(rel(m.k1, 0.5 * std::sqrt(m.r1)) < 1e-15);
    REQUIRE(std::abs(m.k2 + m.lattice.e(3)) < 1e-11 * std::abs(m.lattice.e(1)));
    // Lattice invariants against the closed forms.
    REQUIRE(rel(m.lattice.g2(), inv.g2) < 1e-11);
    REQUIRE(std::abs(m.lattice.g3() - inv.g3) < 1e-11 * std::pow(std::abs(inv.e1), 3));
    REQUIRE(rel(m.lattice.e(1), inv.e1) < 1e-12);
    REQUIRE(rel(m.lattice.e(2), inv.e2) < 1e-12);
    REQUIRE(std::abs(m.lattice.e(3) - inv.e3) < 1e-12 * std::abs(inv.e1));
  }
}

TEST_CASE("K is increasing in k") {
  double prev = 0.0;
  for (double k = 1e-3; k < 0.999; k += 0.01) {
    const double big_k = moduli_from_k(k).big_k;
    REQUIRE(big_k > prev);
    prev = big_k;
  }
}

TEST_CASE("modulus domain") {
  CHECK_THROWS_AS(moduli_from_k(0.0), DomainError);
  CHECK_THROWS_AS(moduli_from_k(1.0), DomainError);
  CHECK_THROWS_AS(moduli_from_k(2.0), DomainError);
  CHECK_THROWS_AS(moduli_from_k(-0.5), DomainError);
  CHECK_THROWS_AS(moduli_from_k(1e-7), DomainError);
  CHECK_THROWS_AS(moduli_from_k(std::nan("")), DomainError);
  CHECK_NOTHROW(moduli_from_k(1e-6));
  CHECK_NOTHROW(moduli_from_k(1.0 - 1e-6));
  CHECK_THROWS_AS(moduli_from_k(0.05, ModulusBounds{0.1, 0.9}), DomainError);
  CHECK_NOTHROW(moduli_from_k(1e-7, ModulusBounds{1e-8, 0.9}));
}

TEST_CASE("spectral curve roots and branch values") {
  for (double k : {0.2, 1.0 / std::sqrt(2.0), 0.9}) {
    CAPTURE(k);
    const MonopoleModuli m = moduli_from_k(k);
    const double kp = m.k_prime;
    auto rhs = [&](cplx z) {
      return m.big_k * m.big_k * z * (k * kp * (z * z - 1.0) + (k * k - kp * kp) * z);
    };
    const auto at0 = spectral_eta(cplx{0.0}, m);
    CHECK(std::abs(at0[0]) == 0.0);
    CHECK(std::abs(at0[1]) == 0.0);
    for (const cplx z : {cplx{1.0}, cplx{0.3, -2.0}, cplx{-4.0, 0.5}}) {
      const auto eta = spectral_eta(z, m);
      CHECK(eta[1] == -eta[0]);
      const double scale = m.big_k * m.big_k * (std::pow(std::abs(z), 3) + std::abs(z));
      CHECK(std::abs(eta[0] * eta[0] - rhs(z)) < 1e-14 * scale);
    }
    const auto b = finite_branch_values(m);
    CHECK(rel(b[0] * b[1], -1.0) < 1e-14);
    CHECK(b[0] == doctest::Approx(-k / kp));
    for (double v : b) CHECK(std::abs(spectral_eta(cplx{v}, m)[0]) < 1e-7 * m.big_k);
  }
  // zeta = 1 on the square lattice: kk'(1 - 1) + 0 = 0.
  CHECK(std::abs(spectral_eta(cplx{1.0}, moduli_from_k(1.0 / std::sqrt(2.0)))[0]) < 1e-7);
}

TEST_CASE("uniformization lands on the curve") {
  for (double k : {0.05, 0.5, 0.95}) {
    CAPTURE(k);
    const MonopoleModuli m = moduli_from_k(k);
    const RectLattice& L = m.lattice;
    const CurvePoint half1 = uniformize(cplx{0.5 * L.omega1()}, m);
    CHECK(rel(half1.zeta, L.root_gap(1, 3)) < 1e-12);
    CHECK(std::abs(half1.eta) < 1e-9 * m.big_k * std::abs(half1.zeta));
    const CurvePoint half3 = uniformize(0.5 * L.omega3(), m);
    CHECK(std::abs(half3.zeta) < 1e-12 * std::abs(L.e(1)));
    CHECK(std::abs(half3.eta) < 1e-9 * m.big_k);
    CHECK_THROWS_AS(uniformize(L.omega2(), m), PoleProximityError);

    for (const cplx u : testsupport::regular_points(m, 300, 31)) {
      const CurvePoint p = uniformize(u, m);
      const auto eta = spectral_eta(p.zeta, m);
      const double d = std::min(std::abs(p.eta - eta[0]), std::abs(p.eta - eta[1]));
      REQUIRE(d / std::max(1.0, std::abs(p.eta)) < 1e-9);
      // u and -u are the two sheets over the same zeta.
      const CurvePoint q = uniformize(-u, m);
      REQUIRE(rel(q.zeta, p.zeta) < 1e-12);
      REQUIRE(rel(q.eta, -p.eta) < 1e-12);
    }
  }
}

TEST_SUITE_END();
