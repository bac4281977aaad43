#pragma once

// Residual checks over the whole pipeline and the report that collects them.
// Every residual is dimensionless; a check passes when residual <= tolerance.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monosurf/analysis.hpp"

namespace monosurf {

/// Closed forms of wp, wp', wp'', wp''' at omega1/4, omega2/4, omega3/4,
/// indexed [derivative][point].
std::array<std::array<cplx, 3>, 4> quarter_period_table(double k);

/// Pseudo-random u in the fundamental rectangle, at least 0.05 omega1 away from
/// the ends and from the half periods. Deterministic in seed.
std::vector<cplx> random_regular_points(const MonopoleModuli& m, std::size_t count, std::uint64_t seed);

double quarter_values_residual(const MonopoleModuli& m);
double lattice_roots_residual(const MonopoleModuli& m);
double wp_ode_residual(const MonopoleModuli& m, const std::vector<cplx>& pts);
double quadratic_identity_residual(const MonopoleModuli& m, const std::vector<cplx>& pts);
double duplication_identity_residual(const MonopoleModuli& m, const std::vector<cplx>& pts);
double uniformization_residual(const MonopoleModuli& m, const std::vector<cplx>& pts);
double nullity_residual(const MonopoleModuli& m, const std::vector<cplx>& pts);
double oracle_residual(const MonopoleModuli& m, const std::vector<cplx>& pts);
double quarter_phi_residual(const MonopoleModuli& m);
/// Re Phi at the quarter periods against +-beta_j.
double branch_point_residual(const MonopoleModuli& m);
double quarter_density_residual(const MonopoleModuli& m);
/// The four reflection symmetries of G about the quarter-period lines.
double density_symmetry_residual(const MonopoleModuli& m, const std::vector<cplx>& pts);
double curvature_metric_residual(const MonopoleModuli& m, const std::vector<cplx>& pts);
double total_curvature_residual(const MonopoleModuli& m, int grid_n);
/// max |phi_1|, |phi_3| over the Higgs polylines (absolute).
double higgs_axis_residual(const GammaGraph& graph, const MonopoleModuli& m);
/// max |phi_1| over the star polyline (absolute).
double star_plane_residual(const GammaGraph& graph, const MonopoleModuli& m);
/// Distance of the star vertices phi(omega2/4 + j omega1/4) from {+-beta2, +-beta3}, relative to K.
double star_vertex_residual(const MonopoleModuli& m);
/// phi_2 along V_{1/4} runs beta1 -> beta3 -> beta1 -> beta3 -> beta1 over one period,
/// strictly monotone on each quarter. Largest step of the wrong sign over `samples`
/// steps, relative to K; zero when monotone.
double higgs_monotone_residual(const MonopoleModuli& m, int samples);
double winding_residual(const MonopoleModuli& m, QuarterLine which, int samples);

struct CheckRecord {
  std::string name;
  std::optional<double> k;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool informational = false;  ///< reported, never fails the run
  std::string note;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct VerificationOptions {
  std::optional<double> tolerance;  ///< replaces every default tolerance
  std::size_t random_points = 200;
  int curvature_grid = 512;
  std::uint64_t seed = 0x5eed;
};

/// Runs every check for each k. An empty list yields an empty report.
/// Throws DomainError when some k is outside the admissible interval.
VerificationReport run_verification(const std::vector<double>& k_list, const VerificationOptions& options = {});

}  // namespace monosurf
