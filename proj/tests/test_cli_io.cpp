#include <doctest.h>

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "monosurf/mesh.hpp"
#include "monosurf/sweep.hpp"
#include "monosurf/verification.hpp"
#include "support.hpp"

using namespace monosurf;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "monosurf_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

bool has_non_finite_text(const std::string& text) {
  for (const char* bad : {"nan", "NaN", "inf", "Inf"}) {
    if (text.find(bad) != std::string::npos) return true;
  }
  return false;
}

PatchSpec small_patch() {
  PatchSpec spec;
  spec.k = 0.5;
  spec.units = Units::period;
  spec.x_min = 0.1;
  spec.x_max = 0.2;
  spec.y_min = 0.3;
  spec.y_max = 0.4;
  return spec;
}

}  // namespace

TEST_SUITE_BEGIN("cli-io");

TEST_CASE("a 2x2 grid is two triangles") {
  const PatchSpec spec = small_patch();
  const MonopoleModuli m = moduli_from_k(spec.k);
  const SurfaceMesh mesh = sample_patch(spec, m);
  CHECK(mesh.vertices.size() == 4);
  CHECK(mesh.faces.size() == 2);
  CHECK(mesh.metadata.excluded == 0);

  std::ostringstream obj;
  write_obj(obj, mesh);
  CHECK(count_prefix(obj.str(), "v ") == 4);
  CHECK(count_prefix(obj.str(), "vn ") == 4);
  CHECK(count_prefix(obj.str(), "f ") == 2);

  std::ostringstream ply;
  write_ply(ply, mesh);
  CHECK(ply.str().find("element vertex 4") != std::string::npos);
  CHECK(ply.str().find("element face 2") != std::string::npos);
  CHECK(ply.str().find("property double quality_G") != std::string::npos);
  CHECK(ply.str().find("property double quality_K") != std::string::npos);

  std::ostringstream csv;
  write_csv(csv, mesh);
  CHECK(count_prefix(csv.str(), "") == mesh.vertices.size() + 1);
}

TEST_CASE("period and absolute units describe the same patch") {
  const MonopoleModuli m = moduli_from_k(0.5);
  PatchSpec a = small_patch();
  a.nx = 5;
  a.ny = 4;
  PatchSpec b = a;
  b.units = Units::absolute;
  b.x_min *= m.lattice.omega1();
  b.x_max *= m.lattice.omega1();
  b.y_min *= m.lattice.omega2_mag();
  b.y_max *= m.lattice.omega2_mag();
  const SurfaceMesh ma = sample_patch(a, m);
  const SurfaceMesh mb = sample_patch(b, m);
  REQUIRE(ma.vertices.size() == mb.vertices.size());
  for (std::size_t i = 0; i < ma.vertices.size(); ++i) {
    CHECK(norm(ma.vertices[i].pos - mb.vertices[i].pos) < 1e-12);
  }
  CHECK(ma.faces == mb.faces);
}

TEST_CASE("exclusion drops vertices near the ends and keeps faces consistent") {
  const MonopoleModuli m = moduli_from_k(0.3);
  PatchSpec spec;
  spec.k = 0.3;
  spec.units = Units::period;
  spec.nx = 41;
  spec.ny = 41;
  spec.exclusion_radius = default_exclusion_radius(m);
  const SurfaceMesh mesh = sample_patch(spec, m);
  CHECK(mesh.metadata.excluded > 0);
  CHECK(mesh.vertices.size() + mesh.metadata.excluded == 41u * 41u);
  for (const auto& f : mesh.faces) {
    for (auto idx : f) REQUIRE(idx < mesh.vertices.size());
  }
  for (const auto& v : mesh.vertices) {
    REQUIRE(end_distance(v.u, m) >= spec.exclusion_radius);
    REQUIRE(std::isfinite(v.pos[0]));
    REQUIRE(std::isfinite(v.gauss_curv));
  }
  std::ostringstream obj;
  write_obj(obj, mesh);
  CHECK_FALSE(has_non_finite_text(obj.str()));
  CHECK(default_exclusion_radius(m) == doctest::Approx(0.02 * m.lattice.omega1()));
}

TEST_CASE("patch validation and empty meshes") {
  const MonopoleModuli m = moduli_from_k(0.5);
  PatchSpec spec = small_patch();
  spec.nx = 1;
  CHECK_THROWS_AS(validate(spec), DomainError);
  spec = small_patch();
  spec.x_max = spec.x_min;
  CHECK_THROWS_AS(validate(spec), DomainError);
  spec = small_patch();
  spec.exclusion_radius = -1.0;
  CHECK_THROWS_AS(validate(spec), DomainError);
  spec = small_patch();
  spec.k = 0.6;
  CHECK_THROWS_AS(sample_patch(spec, m), DomainError);

  // A tiny patch around the end at u = 0 with a large radius has nothing left.
  spec = small_patch();
  spec.x_min = -0.01;
  spec.x_max = 0.01;
  spec.y_min = -0.01;
  spec.y_max = 0.01;
  spec.exclusion_radius = m.lattice.omega1();
  CHECK_THROWS_AS(sample_patch(spec, m), EmptyMeshError);
}

TEST_CASE("CSV export round-trips bit for bit and exports are deterministic") {
  PatchSpec spec = small_patch();
  spec.nx = 7;
  spec.ny = 5;
  const MonopoleModuli m = moduli_from_k(spec.k);
  const SurfaceMesh mesh = sample_patch(spec, m);
  const fs::path csv = scratch("roundtrip.csv");
  export_mesh(mesh, MeshFormat::csv, csv);
  const auto rows = read_csv_mesh(csv);
  REQUIRE(rows.size() == mesh.vertices.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SurfaceSample& s = mesh.vertices[i];
    const double want[11] = {s.u.real(), s.u.imag(), s.pos[0], s.pos[1], s.pos[2], s.normal[0],
                             s.normal[1], s.normal[2], s.lambda, s.g_density, s.gauss_curv};
    for (int c = 0; c < 11; ++c) {
      REQUIRE(std::bit_cast<std::uint64_t>(rows[i][c]) == std::bit_cast<std::uint64_t>(want[c]));
    }
  }

  for (MeshFormat f : {MeshFormat::obj, MeshFormat::ply, MeshFormat::csv}) {
    const fs::path a = scratch("det_a." + extension(f));
    const fs::path b = scratch("det_b." + extension(f));
    export_mesh(sample_patch(spec, m), f, a);
    export_mesh(sample_patch(spec, m), f, b);
    CHECK(slurp(a) == slurp(b));
  }
  CHECK_THROWS_AS(export_mesh(mesh, MeshFormat::obj, "/nonexistent_dir/x/y.obj"), IoError);
  CHECK_THROWS_AS(read_csv_mesh("/nonexistent_dir/none.csv"), IoError);
}

TEST_CASE("number formatting round-trips") {
  testsupport::Rng rng(79);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.uniform(-300, 300)));
    for (const std::string& s : {format_shortest(x), format_17(x)}) {
      REQUIRE(std::bit_cast<std::uint64_t>(std::stod(s)) == std::bit_cast<std::uint64_t>(x));
    }
  }
  CHECK(format_shortest(0.2) == "0.2");
  CHECK(parse_format("ply") == MeshFormat::ply);
  CHECK_THROWS_AS(parse_format("stl"), DomainError);
  CHECK(extension(MeshFormat::obj) == "obj");
}

TEST_CASE("figure presets") {
  const PatchSpec f1 = figure_preset(FigurePreset::fig1, 64, 16);
  CHECK(f1.k == 0.01);
  const MonopoleModuli m1 = moduli_from_k(f1.k);
  CHECK(f1.x_max == doctest::Approx(m1.lattice.omega1()));
  CHECK(f1.y_max - f1.y_min == doctest::Approx(0.1));
  const SurfaceMesh a = sample_patch(f1, m1);
  CHECK(a.vertices.size() + a.metadata.excluded == 64u * 16u);

  const PatchSpec f2 = figure_preset(FigurePreset::fig2, 8, 64);
  CHECK(f2.k == 0.999);
  const MonopoleModuli m2 = moduli_from_k(f2.k);
  CHECK(f2.y_max == doctest::Approx(0.5 * m2.lattice.omega2_mag()));
  const SurfaceMesh b = sample_patch(f2, m2);
  CHECK(b.vertices.size() + b.metadata.excluded == 8u * 64u);
  for (const auto& v : b.vertices) REQUIRE(std::isfinite(v.g_density));
}

TEST_CASE("verification report") {
  const VerificationReport r = run_verification({0.5});
  CHECK(r.passed());
  bool named[4] = {false, false, false, false};
  for (const CheckRecord& c : r.checks) {
    if (c.name == "quarter_period_values") named[0] = true;
    if (c.name == "nullity") named[1] = true;
    if (c.name == "total_curvature") named[2] = true;
    if (c.name == "turning_modulus") named[3] = true;
    if (!c.informational) CHECK_MESSAGE(c.pass, c.name);
  }
  CHECK((named[0] && named[1] && named[2] && named[3]));
  const auto j = r.to_json();
  CHECK(j.at("passed").get<bool>());
  CHECK(j.at("checks").size() == r.checks.size());

  const VerificationReport empty = run_verification({});
  CHECK(empty.checks.empty());
  CHECK(empty.passed());
  CHECK_THROWS_AS(run_verification({2.0}), DomainError);

  VerificationOptions strict;
  strict.tolerance = 1e-300;
  strict.random_points = 20;
  strict.curvature_grid = 64;
  CHECK_FALSE(run_verification({0.5}, strict).passed());
}

TEST_CASE("sweep writes one mesh per modulus and a summary") {
  const fs::path dir = scratch("sweep");
  fs::remove_all(dir);
  SweepOptions opt;
  opt.nx = 24;
  opt.ny = 24;
  opt.curvature_grid = 64;
  const auto rows = sweep({0.2, 0.4, 0.6}, SweepPreset::star, dir, opt);
  REQUIRE(rows.size() == 3);
  for (double k : {0.2, 0.4, 0.6}) CHECK(fs::exists(dir / sweep_file_name(k, MeshFormat::obj)));
  CHECK(sweep_file_name(0.2, MeshFormat::obj) == "surface_k0.2.obj");
  const std::string summary = slurp(dir / "summary.csv");
  CHECK(count_prefix(summary, "") == 4);
  CHECK(summary.rfind("k,beta1_y,beta2_z,beta3_y,", 0) == 0);
  for (const SweepRow& row : rows) {
    const MonopoleModuli m = moduli_from_k(row.k);
    const auto beta = branch_points(m);
    CHECK(row.beta1 == beta[0][1]);
    CHECK(row.beta2 == beta[1][2]);
    CHECK(row.beta3 == beta[2][1]);
    CHECK(row.g_w3 == doctest::Approx(4.0 / (m.k * m.k_prime)));
  }
  // The star shrinks as k decreases.
  CHECK(rows[0].star_extent_z < rows[1].star_extent_z);
  CHECK(rows[1].star_extent_z < rows[2].star_extent_z);

  const fs::path bad = scratch("sweep_bad");
  fs::remove_all(bad);
  CHECK_THROWS_AS(sweep({0.5, 1.5}, SweepPreset::star, bad, opt), DomainError);
  CHECK_FALSE(fs::exists(bad / "summary.csv"));
  CHECK(parse_sweep_preset("higgs") == SweepPreset::higgs);
  CHECK_THROWS_AS(parse_sweep_preset("nope"), DomainError);
}

TEST_SUITE_END();
