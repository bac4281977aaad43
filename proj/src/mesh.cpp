#include "monosurf/mesh.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <system_error>
#include <thread>

namespace monosurf {

namespace {

bool finite_sample(const SurfaceSample& s) {
  for (double v : s.pos) {
    if (!std::isfinite(v)) return false;
  }
  for (double v : s.normal) {
    if (!std::isfinite(v)) return false;
  }
  return std::isfinite(s.lambda) && std::isfinite(s.g_density) && std::isfinite(s.gauss_curv);
}

// Evaluates body(i) for i in [0, count) over a few worker threads. Each index
// owns its output slot, so the result does not depend on scheduling.
template <class Body>
void parallel_for(std::size_t count, Body body) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 16);
  if (workers == 1 || count < 256) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
}

std::string format_with(double value, std::optional<int> precision) {
  char buf[64];
  const auto res = precision ? std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, *precision)
                             : std::to_chars(buf, buf + sizeof buf, value);
  if (res.ec != std::errc{}) throw IoError("number formatting failed");
  return std::string(buf, res.ptr);
}

void check_stream(const std::ostream& out, const std::filesystem::path& path) {
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string format_shortest(double value) { return format_with(value, std::nullopt); }

std::string format_17(double value) { return format_with(value, 17); }

void validate(const PatchSpec& spec) {
  if (spec.nx < 2 || spec.ny < 2) throw DomainError("PatchSpec: nx and ny must be at least 2");
  if (!(spec.x_max > spec.x_min) || !(spec.y_max > spec.y_min)) {
    throw DomainError("PatchSpec: empty domain range");
  }
  if (!(spec.exclusion_radius >= 0.0)) throw DomainError("PatchSpec: exclusion radius must be nonnegative");
}

double default_exclusion_radius(const MonopoleModuli& m) { return 0.02 * m.lattice.omega1(); }

double end_distance(cplx u, const MonopoleModuli& m) {
  // u is an end iff 2u lies on the period lattice.
  return 0.5 * m.lattice.distance_to_lattice(2.0 * u);
}

SurfaceMesh sample_patch(const PatchSpec& spec, const MonopoleModuli& m) {
  validate(spec);
  if (std::abs(spec.k - m.k) > 1e-15) throw DomainError("sample_patch: spec.k does not match the moduli");

  const double sx = spec.units == Units::period ? m.lattice.omega1() : 1.0;
  const double sy = spec.units == Units::period ? m.lattice.omega2_mag() : 1.0;
  const double x0 = spec.x_min * sx;
  const double x1 = spec.x_max * sx;
  const double y0 = spec.y_min * sy;
  const double y1 = spec.y_max * sy;
  const auto nx = static_cast<std::size_t>(spec.nx);
  const auto ny = static_cast<std::size_t>(spec.ny);

  std::vector<SurfaceSample> grid(nx * ny);
  std::vector<char> keep(nx * ny, 0);
  parallel_for(nx * ny, [&](std::size_t idx) {
    const std::size_t i = idx % nx;
    const std::size_t j = idx / nx;
    const cplx u{x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(nx - 1),
                 y0 + (y1 - y0) * static_cast<double>(j) / static_cast<double>(ny - 1)};
    if (end_distance(u, m) <= spec.exclusion_radius) return;
    try {
      grid[idx] = immerse(u, m);
    } catch (const EndProximityError&) {
      return;
    }
    keep[idx] = finite_sample(grid[idx]) ? 1 : 0;
  });

  SurfaceMesh mesh;
  constexpr auto none = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> remap(nx * ny, none);
  for (std::size_t idx = 0; idx < nx * ny; ++idx) {
    if (!keep[idx]) continue;
    remap[idx] = static_cast<std::uint32_t>(mesh.vertices.size());
    mesh.vertices.push_back(grid[idx]);
  }
  if (mesh.vertices.empty()) throw EmptyMeshError("sample_patch: every grid vertex was excluded");

  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (remap[a] == none || remap[b] == none || remap[c] == none) return;
    mesh.faces.push_back({remap[a], remap[b], remap[c]});
  };
  for (std::size_t j = 0; j + 1 < ny; ++j) {
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      const std::size_t v00 = j * nx + i;
      const std::size_t v10 = v00 + 1;
      const std::size_t v01 = v00 + nx;
      const std::size_t v11 = v01 + 1;
      add_face(v00, v10, v11);
      add_face(v00, v11, v01);
    }
  }

  mesh.metadata = {spec.k, x0, x1, y0, y1, spec.nx, spec.ny, spec.exclusion_radius, spec.fields,
                   nx * ny - mesh.vertices.size()};
  return mesh;
}

PatchSpec figure_preset(FigurePreset preset, int nx, int ny) {
  PatchSpec spec;
  spec.nx = nx;
  spec.ny = ny;
  spec.units = Units::absolute;
  if (preset == FigurePreset::fig1) {
    spec.k = 0.01;
    const MonopoleModuli m = moduli_from_k(spec.k);
    const double w1 = m.lattice.omega1();
    const double w2 = m.lattice.omega2_mag();
    spec.x_min = 0.0;
    spec.x_max = w1;
    spec.y_min = 0.25 * w2 - 0.05;
    spec.y_max = 0.25 * w2 + 0.05;
    spec.exclusion_radius = default_exclusion_radius(m);
  } else {
    spec.k = 0.999;
    const MonopoleModuli m = moduli_from_k(spec.k);
    const double w1 = m.lattice.omega1();
    const double w2 = m.lattice.omega2_mag();
    spec.x_min = 0.25 * w1 - 0.025;
    spec.x_max = 0.25 * w1 + 0.025;
    spec.y_min = 0.0;
    spec.y_max = 0.5 * w2;
    spec.exclusion_radius = default_exclusion_radius(m);
  }
  return spec;
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh) {
  out << "# monosurf k=" << format_17(mesh.metadata.k) << " nx=" << mesh.metadata.nx
      << " ny=" << mesh.metadata.ny << " excluded=" << mesh.metadata.excluded << '\n';
  for (const auto& v : mesh.vertices) {
    out << "v " << format_17(v.pos[0]) << ' ' << format_17(v.pos[1]) << ' ' << format_17(v.pos[2]) << '\n';
  }
  if (mesh.metadata.fields.normal) {
    for (const auto& v : mesh.vertices) {
      out << "vn " << format_17(v.normal[0]) << ' ' << format_17(v.normal[1]) << ' '
          << format_17(v.normal[2]) << '\n';
    }
  }
  const bool normals = mesh.metadata.fields.normal;
  for (const auto& f : mesh.faces) {
    out << 'f';
    for (const std::uint32_t idx : f) {
      out << ' ' << idx + 1;
      if (normals) out << "//" << idx + 1;
    }
    out << '\n';
  }
}

void write_ply(std::ostream& out, const SurfaceMesh& mesh) {
  const FieldSet& fs = mesh.metadata.fields;
  out << "ply\nformat ascii 1.0\n";
  out << "comment monosurf k=" << format_17(mesh.metadata.k) << '\n';
  out << "element vertex " << mesh.vertices.size() << '\n';
  out << "property double x\nproperty double y\nproperty double z\n";
  if (fs.normal) out << "property double nx\nproperty double ny\nproperty double nz\n";
  if (fs.lambda) out << "property double quality_lambda\n";
  if (fs.g_density) out << "property double quality_G\n";
  if (fs.gauss_curv) out << "property double quality_K\n";
  out << "element face " << mesh.faces.size() << '\n';
  out << "property list uchar uint vertex_indices\nend_header\n";
  for (const auto& v : mesh.vertices) {
    out << format_17(v.pos[0]) << ' ' << format_17(v.pos[1]) << ' ' << format_17(v.pos[2]);
    if (fs.normal) {
      out << ' ' << format_17(v.normal[0]) << ' ' << format_17(v.normal[1]) << ' ' << format_17(v.normal[2]);
    }
    if (fs.lambda) out << ' ' << format_17(v.lambda);
    if (fs.g_density) out << ' ' << format_17(v.g_density);
    if (fs.gauss_curv) out << ' ' << format_17(v.gauss_curv);
    out << '\n';
  }
  for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void write_csv(std::ostream& out, const SurfaceMesh& mesh) {
  out << "x_re,y_im,px,py,pz,nx,ny,nz,lambda,G,K\n";
  for (const auto& v : mesh.vertices) {
    const double row[11] = {v.u.real(),  v.u.imag(),  v.pos[0], v.pos[1],    v.pos[2],    v.normal[0],
                            v.normal[1], v.normal[2], v.lambda, v.g_density, v.gauss_curv};
    for (int c = 0; c < 11; ++c) {
      if (c) out << ',';
      out << format_17(row[c]);
    }
    out << '\n';
  }
}

void export_mesh(const SurfaceMesh& mesh, MeshFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  switch (format) {
    case MeshFormat::obj: write_obj(out, mesh); break;
    case MeshFormat::ply: write_ply(out, mesh); break;
    case MeshFormat::csv: write_csv(out, mesh); break;
  }
  out.flush();
  check_stream(out, path);
}

std::vector<std::array<double, 11>> read_csv_mesh(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw IoError("missing CSV header in " + path.string());
  std::vector<std::array<double, 11>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 11> row{};
    const char* p = line.data();
    const char* end = p + line.size();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto res = std::from_chars(p, end, row[c]);
      if (res.ec != std::errc{}) throw IoError("malformed CSV row in " + path.string());
      p = res.ptr;
      if (c + 1 < row.size()) {
        if (p == end || *p != ',') throw IoError("malformed CSV row in " + path.string());
        ++p;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

MeshFormat parse_format(const std::string& name) {
  if (name == "obj") return MeshFormat::obj;
  if (name == "ply") return MeshFormat::ply;
  if (name == "csv") return MeshFormat::csv;
  throw DomainError("unknown mesh format: " + name);
}

std::string extension(MeshFormat format) {
  switch (format) {
    case MeshFormat::obj: return "obj";
    case MeshFormat::ply: return "ply";
    case MeshFormat::csv: return "csv";
  }
  return "obj";
}

}  // namespace monosurf
