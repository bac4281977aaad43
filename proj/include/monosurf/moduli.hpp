#pragma once

#include <array>

#include "monosurf/elliptic.hpp"

namespace monosurf {

/// Admissible modulus interval. Both ends degenerate (kk' -> 0).
struct ModulusBounds {
  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
};

/// Every k-derived constant of the centred charge-2 spectral curve
///   eta^2 = K^2 zeta (k k' (zeta^2 - 1) + (k^2 - k'^2) zeta).
struct MonopoleModuli {
  double k;
  double k_prime;
  double theta;        ///< arcsin k, half the angle between the lines through the centre
  double big_k;        ///< K(k)
  double big_k_prime;  ///< K(k')
  RectLattice lattice; ///< omega1 = 2 sqrt(kk') K, omega2 = 2i sqrt(kk') K'
  double r1;           ///< k k' K^2
  double r2;           ///< (k'^2 - k^2) K^2
  double k1;           ///< sqrt(r1) / 2
  double k2;           ///< (1 - 2k^2) / (3kk'), equal to -e3
};

/// Throws DomainError outside [bounds.lo, bounds.hi].
MonopoleModuli moduli_from_k(double k, ModulusBounds bounds = {});

/// Both square roots of the right-hand side of the curve equation.
std::array<cplx, 2> spectral_eta(cplx zeta, const MonopoleModuli& m);

struct CurvePoint {
  cplx zeta;
  cplx eta;
};

/// zeta = wp(u) - e3, eta = (omega1/4) wp'(u).
CurvePoint uniformize(cplx u, const MonopoleModuli& m);

/// The finite nonzero branch values of the projection to P1: {-k/k', k'/k}.
std::array<double, 2> finite_branch_values(const MonopoleModuli& m);

}  // namespace monosurf
