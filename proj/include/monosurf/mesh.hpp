#pragma once

// Grid sampling of the immersion and mesh export (OBJ, PLY, CSV).

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "monosurf/nullcurve.hpp"

namespace monosurf {

class EmptyMeshError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// How PatchSpec ranges are read: multiples of (omega1, |omega2|) or raw u values.
enum class Units { period, absolute };

enum class MeshFormat { obj, ply, csv };

struct FieldSet {
  bool position = true;
  bool normal = true;
  bool g_density = true;
  bool gauss_curv = true;
  bool lambda = true;
};

struct PatchSpec {
  double k = 0.5;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  int nx = 2;
  int ny = 2;
  /// Absolute u-plane radius around the ends u in {0, w1/2, w2/2, w3/2} mod the lattice.
  double exclusion_radius = 0.0;
  Units units = Units::absolute;
  FieldSet fields{};
};

/// Throws DomainError unless nx, ny >= 2, ranges are nonempty and the radius is >= 0.
void validate(const PatchSpec& spec);

/// 0.02 * omega1.
double default_exclusion_radius(const MonopoleModuli& m);

/// Distance from u to the nearest end point (half-lattice point).
double end_distance(cplx u, const MonopoleModuli& m);

struct MeshMetadata {
  double k = 0.0;
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;  ///< absolute u-plane values
  int nx = 0, ny = 0;
  double exclusion_radius = 0.0;
  FieldSet fields{};
  std::size_t excluded = 0;  ///< grid vertices dropped
};

struct SurfaceMesh {
  std::vector<SurfaceSample> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;
  MeshMetadata metadata;
};

/// Regular nx-by-ny grid, two triangles per cell. Vertices inside the exclusion
/// radius, or whose fields are not finite, are dropped with their faces.
/// Throws EmptyMeshError if nothing survives.
SurfaceMesh sample_patch(const PatchSpec& spec, const MonopoleModuli& m);

enum class FigurePreset { fig1, fig2 };

/// Domains of the two reference figures (absolute units):
/// fig1, k = 0.01: 0 <= x <= w1, |w2|/4 - 0.05 <= y <= |w2|/4 + 0.05;
/// fig2, k = 0.999: w1/4 - 0.025 <= x <= w1/4 + 0.025, 0 <= y <= |w2|/2.
PatchSpec figure_preset(FigurePreset preset, int nx, int ny);

void write_obj(std::ostream& out, const SurfaceMesh& mesh);
void write_ply(std::ostream& out, const SurfaceMesh& mesh);
void write_csv(std::ostream& out, const SurfaceMesh& mesh);

/// Throws IoError when the file cannot be written.
void export_mesh(const SurfaceMesh& mesh, MeshFormat format, const std::filesystem::path& path);

/// CSV rows: x_re, y_im, px, py, pz, nx, ny, nz, lambda, G, K.
std::vector<std::array<double, 11>> read_csv_mesh(const std::filesystem::path& path);

/// Shortest round-trip text of a double, locale independent.
std::string format_shortest(double value);
/// 17 significant digits, locale independent.
std::string format_17(double value);

MeshFormat parse_format(const std::string& name);
std::string extension(MeshFormat format);

}  // namespace monosurf
