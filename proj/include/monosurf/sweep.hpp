#pragma once

// Meshes and summary statistics over a list of moduli.

#include <filesystem>
#include <string>
#include <vector>

#include "monosurf/mesh.hpp"

namespace monosurf {

/// star: band |Im u - |w2|/4| <= |w2|/16 around H_{1/4};
/// higgs: band |Re u - w1/4| <= w1/16 around V_{1/4};
/// full: the whole fundamental rectangle.
enum class SweepPreset { star, higgs, full };

SweepPreset parse_sweep_preset(const std::string& name);

struct SweepOptions {
  MeshFormat format = MeshFormat::obj;
  int nx = 96;
  int ny = 96;
  int curvature_grid = 256;
};

PatchSpec sweep_patch(SweepPreset preset, const MonopoleModuli& m, int nx, int ny);

struct SweepRow {
  double k;
  double beta1;  ///< Higgs-axis coordinate of beta_1
  double beta2;  ///< third-axis coordinate of beta_2
  double beta3;  ///< Higgs-axis coordinate of beta_3
  double g_w1;   ///< G(omega1/4)
  double g_w2;   ///< G(omega2/4)
  double g_w3;   ///< G(omega3/4)
  double total_curvature;
  double star_extent_y;  ///< half-width of the star polyline's bounding box along e2
  double star_extent_z;  ///< half-width along e3
};

SweepRow sweep_row(const MonopoleModuli& m, int curvature_grid);

/// "surface_k0.2.obj" etc.; the value is printed in shortest round-trip form.
std::string sweep_file_name(double k, MeshFormat format);

/// Writes one mesh per k and summary.csv into out_dir (created if missing).
/// Returns the rows in input order. Throws DomainError for inadmissible k and
/// IoError on write failure.
std::vector<SweepRow> sweep(const std::vector<double>& k_values, SweepPreset preset,
                            const std::filesystem::path& out_dir, const SweepOptions& options = {});

}  // namespace monosurf
