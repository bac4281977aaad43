#include "monosurf/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <system_error>

#include "monosurf/analysis.hpp"

namespace monosurf {

SweepPreset parse_sweep_preset(const std::string& name) {
  if (name == "star") return SweepPreset::star;
  if (name == "higgs") return SweepPreset::higgs;
  if (name == "full") return SweepPreset::full;
  throw DomainError("unknown sweep preset: " + name);
}

PatchSpec sweep_patch(SweepPreset preset, const MonopoleModuli& m, int nx, int ny) {
  PatchSpec spec;
  spec.k = m.k;
  spec.nx = nx;
  spec.ny = ny;
  spec.units = Units::period;
  spec.exclusion_radius = default_exclusion_radius(m);
  switch (preset) {
    case SweepPreset::star:
      spec.x_min = 0.0;
      spec.x_max = 1.0;
      spec.y_min = 0.25 - 1.0 / 16.0;
      spec.y_max = 0.25 + 1.0 / 16.0;
      break;
    case SweepPreset::higgs:
      spec.x_min = 0.25 - 1.0 / 16.0;
      spec.x_max = 0.25 + 1.0 / 16.0;
      spec.y_min = 0.0;
      spec.y_max = 1.0;
      break;
    case SweepPreset::full:
      spec.x_min = 0.0;
      spec.x_max = 1.0;
      spec.y_min = 0.0;
      spec.y_max = 1.0;
      break;
  }
  return spec;
}

SweepRow sweep_row(const MonopoleModuli& m, int curvature_grid) {
  const auto beta = branch_points(m);
  const cplx w1 = m.lattice.omega1();
  const cplx w2 = m.lattice.omega2();
  const GammaGraph graph = gamma_graph(m, 32);
  double ey = 0.0;
  double ez = 0.0;
  for (const auto& s : graph.star_polyline) {
    ey = std::max(ey, std::abs(s.pos[1]));
    ez = std::max(ez, std::abs(s.pos[2]));
  }
  return {m.k,
          beta[0][1],
          beta[1][2],
          beta[2][1],
          curvature_density(0.25 * w1, m),
          curvature_density(0.25 * w2, m),
          curvature_density(0.25 * (w1 + w2), m),
          total_curvature(m, curvature_grid),
          ey,
          ez};
}

std::string sweep_file_name(double k, MeshFormat format) {
  return "surface_k" + format_shortest(k) + "." + extension(format);
}

std::vector<SweepRow> sweep(const std::vector<double>& k_values, SweepPreset preset,
                            const std::filesystem::path& out_dir, const SweepOptions& options) {
  std::vector<MonopoleModuli> moduli;
  moduli.reserve(k_values.size());
  for (const double k : k_values) moduli.push_back(moduli_from_k(k));

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<SweepRow> rows;
  rows.reserve(moduli.size());
  for (const MonopoleModuli& m : moduli) {
    const SurfaceMesh mesh = sample_patch(sweep_patch(preset, m, options.nx, options.ny), m);
    export_mesh(mesh, options.format, out_dir / sweep_file_name(m.k, options.format));
    rows.push_back(sweep_row(m, options.curvature_grid));
  }

  const auto summary_path = out_dir / "summary.csv";
  std::ofstream out(summary_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + summary_path.string() + " for writing");
  out << "k,beta1_y,beta2_z,beta3_y,G_w1_4,G_w2_4,G_w3_4,total_curvature,star_extent_y,star_extent_z\n";
  for (const SweepRow& r : rows) {
    const double vals[10] = {r.k,    r.beta1, r.beta2, r.beta3,           r.g_w1,
                             r.g_w2, r.g_w3,  r.total_curvature, r.star_extent_y, r.star_extent_z};
    for (int c = 0; c < 10; ++c) out << (c ? "," : "") << format_17(vals[c]);
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("failed writing " + summary_path.string());
  return rows;
}

}  // namespace monosurf
