#pragma once

// The null curve Phi generated by osculating S_k, the minimal immersion
// phi = Re Phi, its Gauss maps and curvature.
//
// Vectors are in k-monopole coordinates (main axis, Higgs axis, third axis)
// unless stated otherwise. frame_transform converts to and from the standard
// frame in which the spectral curve is written.

#include <stdexcept>

#include "monosurf/moduli.hpp"
#include "monosurf/vec.hpp"

namespace monosurf {

/// Evaluation near one of the two ends (2u on the lattice).
class EndProximityError : public PoleProximityError {
public:
  using PoleProximityError::PoleProximityError;
};

/// The representation formulae divide by wp'(u), which vanishes at half periods.
class DegeneratePointError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct NullPoint {
  cplx u;
  CVec3 phi;
  CVec3 dphi;
};

struct SurfaceSample {
  cplx u;
  Vec3 pos;
  Vec3 normal;
  double lambda;      ///< ds^2 = lambda |du|^2
  double g_density;   ///< G, the area density of the Gauss map
  double gauss_curv;  ///< K = -G / lambda
};

/// A point of C u {infinity}.
struct ExtendedComplex {
  cplx value{};
  bool infinite = false;
};

enum class FrameDirection { to_standard, to_monopole };

/// Phi_1 = -k (w1/4) f1(2u)^3, Phi_2 = k' (w1/4) f2(2u)^3, Phi_3 = -i (w1/4) f3(2u)^3.
NullPoint phi_null(cplx u, const MonopoleModuli& m);

/// Applies A_k (to_monopole) or its transpose (to_standard).
CVec3 frame_transform(const CVec3& v, const MonopoleModuli& m, FrameDirection direction);
Vec3 frame_transform(const Vec3& v, const MonopoleModuli& m, FrameDirection direction);

/// Omega from the generic free-form representation with g = wp - e3 and
/// f = (w1/4) wp', standard frame. Chain-rule derivatives come from the wp jet.
CVec3 weierstrass_rep_oracle(cplx u, const MonopoleModuli& m);

/// The spectral-curve data (g, f) and df/dg, d2f/dg2, d3f/dg3 used by the oracle.
struct RepresentationData {
  cplx g, f, df_dg, d2f_dg2, d3f_dg3;
};
RepresentationData representation_data(cplx u, const MonopoleModuli& m);

/// g_Phi(u) = -(k' f2(2u) + i k f1(2u)) / f3(2u). Total, including the ends.
ExtendedComplex gauss_map(cplx u, const MonopoleModuli& m);

/// g_Phi'(u) = -2i g_Phi(u) / f3(2u).
ExtendedComplex gauss_map_derivative(cplx u, const MonopoleModuli& m);

/// Inverse stereographic projection from -e3: 0 -> +e3, infinity -> -e3.
Vec3 inverse_stereographic(const ExtendedComplex& g);

/// P(x) = (x1 + i x2) / (1 + x3); -e3 maps to infinity.
ExtendedComplex stereographic(const Vec3& x);

/// Unit normal of phi (monopole frame).
Vec3 gauss_sphere(cplx u, const MonopoleModuli& m);

/// G(u) = 8 / (k^2|wp(2u)-e1| + k'^2|wp(2u)-e2| + |wp(2u)-e3|). Total; zero at the ends.
double curvature_density(cplx u, const MonopoleModuli& m);

/// Position, normal, metric, G and K at u. Throws EndProximityError near the ends.
SurfaceSample immerse(cplx u, const MonopoleModuli& m);

}  // namespace monosurf
