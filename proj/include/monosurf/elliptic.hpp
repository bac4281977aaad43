#pragma once

// Complete elliptic integrals and the Weierstrass function on rectangular
// lattices, together with the single-valued roots f_j = sqrt(wp - e_j).

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace monosurf {

using cplx = std::complex<double>;

/// Argument outside the admissible interval of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Evaluation requested too close to a pole of an elliptic function.
class PoleProximityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// K(k) by the arithmetic-geometric mean. Valid for 0 <= k < 1.
double complete_elliptic_k(double k);

/// K'(k) = K(sqrt(1 - k^2)) without forming the complement, which loses
/// relative accuracy for small k. Valid for 0 < k <= 1.
double complete_elliptic_k_prime(double k);

/// E(k) by the AGM with the Gauss correction sum. Valid for 0 <= k <= 1.
double complete_elliptic_e(double k);

/// Default pole-exclusion radius, in units of omega1.
inline constexpr double kPoleExclusion = 1e-8;

/// The lattice Z*omega1 + Z*omega2 with omega1 real and omega2 = i*|omega2|.
///
/// All invariants (half-period values, g2, g3) are derived from Jacobi theta
/// constants at the nome q = exp(-pi |omega2| / omega1). Immutable.
class RectLattice {
public:
  RectLattice(double omega1, double omega2_mag);

  double omega1() const { return omega1_; }
  double omega2_mag() const { return omega2_mag_; }
  cplx omega2() const { return {0.0, omega2_mag_}; }
  /// omega1 + omega2.
  cplx omega3() const { return {omega1_, omega2_mag_}; }
  double nome() const { return q_; }
  double g2() const { return g2_; }
  double g3() const { return g3_; }
  /// Half-period values e1 = wp(omega1/2), e2 = wp(omega2/2), e3 = wp(omega3/2).
  double e(int j) const;
  const std::array<double, 3>& roots() const { return e_; }
  /// e_i - e_j from theta constants, accurate even when the roots nearly coincide.
  double root_gap(int i, int j) const;

  /// Distance from u to the nearest lattice point.
  double distance_to_lattice(cplx u) const;

  /// Numerators and common denominator of the three roots:
  /// f_j(u) = num[j-1] / den. Total (den vanishes exactly at lattice points).
  struct RootQuotients {
    std::array<cplx, 3> num;
    cplx den;
  };
  RootQuotients root_quotients(cplx u) const;

private:
  double omega1_;
  double omega2_mag_;
  double q_;
  // Theta constants theta_2(0), theta_3(0), theta_4(0).
  double th2_, th3_, th4_;
  std::array<double, 3> e_;
  double gap12_, gap13_, gap32_;
  double g2_, g3_;
};

/// wp and its first three derivatives at one point.
struct WpJet {
  cplx p;
  cplx p1;
  cplx p2;
  cplx p3;
};

/// Throws PoleProximityError when u is within eps_rel*omega1 of the lattice.
WpJet wp_jet(cplx u, const RectLattice& lattice, double eps_rel = kPoleExclusion);

/// The meromorphic square root of wp(u) - e_j with residue +1 at the origin.
/// j is 1, 2 or 3. Sign convention: f2, f3 > 0 at omega1/2, i*f1 > 0 at omega2/2.
cplx f_root(int j, cplx u, const RectLattice& lattice, double eps_rel = kPoleExclusion);

/// All three roots at once (shares the theta evaluation).
std::array<cplx, 3> f_roots(cplx u, const RectLattice& lattice, double eps_rel = kPoleExclusion);

}  // namespace monosurf
