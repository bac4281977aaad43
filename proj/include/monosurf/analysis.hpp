#pragma once

// Geometric diagnostics of the minimal surface attached to S_k.

#include <array>
#include <stdexcept>
#include <vector>

#include "monosurf/nullcurve.hpp"

namespace monosurf {

class SamplingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An oriented line {point + t * direction} in R^3.
struct OrientedLine {
  Vec3 point;      ///< closest point to the origin
  Vec3 direction;  ///< unit
};

/// The pointed star graph joining the six metric branch points.
struct GammaGraph {
  std::vector<SurfaceSample> star_polyline;                  ///< image of H_{1/4}
  std::array<std::vector<SurfaceSample>, 2> higgs_polylines; ///< images of V_{1/4}, V_{3/4}
  std::array<Vec3, 6> branch_pts;                            ///< +b1, -b1, +b2, -b2, +b3, -b3
};

enum class QuarterLine { vertical, horizontal };

/// beta_1 = (K/2k)(0,1,0), beta_2 = (k^2 K/2k')(0,0,1), beta_3 = (k^2 K/2)(0,1,0).
std::array<Vec3, 3> branch_points(const MonopoleModuli& m);

/// Closed forms of Phi at omega1/4, omega2/4, omega3/4.
std::array<CVec3, 3> quarter_period_phi(const MonopoleModuli& m);

/// Midpoint rule for the integral of G over [0, w1) x [0, |w2|). Tends to 8 pi.
double total_curvature(const MonopoleModuli& m, int grid_n);

/// Samples phi along H_{1/4}, V_{1/4} and V_{3/4}. Each line is cut into four
/// quarter segments of samples_per_segment steps; polylines are closed.
GammaGraph gamma_graph(const MonopoleModuli& m, int samples_per_segment);

/// dphi3/dphi2 along H_{1/4}, from Re Phi_3' / Re Phi_2'.
double star_slope(cplx u, const MonopoleModuli& m);

/// -(1/k') sqrt((e3 - wp(2u)) / (wp(2u) - e2)), valid between omega2/4 and omega3/4.
double star_slope_closed_form(cplx u, const MonopoleModuli& m);

/// Total rotation of the unit normal around its great circle over one loop:
/// V_{1/4} from w1/4 to w1/4 + w2, H_{1/4} from w2/4 to w2/4 + w1.
/// Angles are measured in the (e1, e3) plane for V and the (e2, e3) plane for H,
/// each oriented from the in-plane axis towards e3.
/// Throws SamplingError when successive normals turn by more than pi/2.
double winding_along_quarter_line(const MonopoleModuli& m, QuarterLine which, int samples);

/// The line {x : sigma_x(zeta) = eta} of the real section
/// sigma_x(zeta) = (x1 + i x2) - 2 x3 zeta - (x1 - i x2) zeta^2, standard frame.
OrientedLine spectral_line(cplx zeta, cplx eta);

/// |eta - sigma_x(zeta)| for a point x.
double incidence_residual(const Vec3& x, cplx zeta, cplx eta);

/// Skew-line distance; perpendicular offset for parallel lines.
double line_distance(const OrientedLine& a, const OrientedLine& b);

/// Normal line of phi at u in the standard frame.
OrientedLine normal_line(cplx u, const MonopoleModuli& m);

/// Distance from the normal line at u to the nearest spectral line of S_k with
/// the same direction, divided by K(k).
double normal_line_spectral_distance(cplx u, const MonopoleModuli& m);

/// normal_line_spectral_distance at `samples` points of V_{1/4}.
std::vector<double> higgs_normal_diagnostic(const MonopoleModuli& m, int samples);

/// E(k)/k'^2 - 2K(k); vanishes where k dK/dk = K.
double turning_residual(double k);

/// dK/dk = E / (k k'^2) - K / k.
double elliptic_k_derivative(double k);

/// The stationary modulus of |beta_1| = K/(2k), by bisection on [0.1, 0.99].
double turning_modulus();

/// min over V'_{1/4} of G1(z) = w1^2 G(w1 z).
double vertical_density_min(const MonopoleModuli& m, int samples);

/// max of G2(z) = |w2|^2 G(|w2| z) on the horizontal line Im z = 1/8,
/// halfway between H'_0 and H'_{1/4}.
double horizontal_density_max_off_line(const MonopoleModuli& m, int samples);

}  // namespace monosurf
