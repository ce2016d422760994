#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "doctest.h"

#include "cosmoburgers/app/commands.hpp"
#include "cosmoburgers/app/config.hpp"
#include "cosmoburgers/app/output.hpp"
#include "cosmoburgers/errors.hpp"

using namespace cosmoburgers;
using namespace cosmoburgers::app;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("cosmoburgers_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

/// Value column of a snapshot CSV (second-to-last field).
std::vector<double> csv_values(const std::string& text) {
  std::vector<double> out;
  for (const auto& line : lines(text)) {
    if (line.empty() || line[0] == '#' || !std::isdigit(static_cast<unsigned char>(line[0]))) {
      continue;
    }
    const auto last = line.rfind(',');
    const auto prev = line.rfind(',', last - 1);
    out.push_back(std::stod(line.substr(prev + 1, last - prev - 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("minimal flat config takes the documented defaults") {
  const auto c = resolve(parse_config("regime: flat\n"));
  CHECK(c.dimension == 1);
  CHECK(c.policy.cfl_number == 0.7);
  CHECK(c.boundary == BoundaryRule::Outflow);
  CHECK(c.policy.space_order == SpaceOrder::Second);
  CHECK(c.policy.time_order == TimeOrder::Rk4);
  CHECK(c.policy.extra_rule == ExtraRule::None);
  CHECK(c.kappa == 0.0);
  CHECK(c.tau0 == 0.0);
  CHECK(c.length == doctest::Approx(std::numbers::pi));
  CHECK(c.cells == 1024);
  CHECK(c.tau_end == 1.0);
}

TEST_CASE("2D defaults") {
  const auto c = resolve(parse_config("dimension: 2\nregime: contracting\n"));
  CHECK(c.policy.cfl_number == 0.5);
  CHECK(c.policy.time_order == TimeOrder::SspRk3);
  CHECK(c.tau0 == -1.0);
  CHECK(c.tau_end == -1e-4);
  CHECK(c.nx == 200);
  CHECK(c.lx == doctest::Approx(std::numbers::pi / std::numbers::sqrt2));
  CHECK(c.checkpoints == std::vector<double>{-0.5, -0.1, -0.01, -1e-3});
}

TEST_CASE("config errors") {
  SUBCASE("unknown key names its line") {
    try {
      parse_config("kappa: 2\n\nfrobnicate: 1\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
      CHECK(std::string(e.what()).find("frobnicate") != std::string::npos);
    }
  }
  SUBCASE("bad value names its line and the choices") {
    try {
      parse_config("regime: steady\n");
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("line 1") != std::string::npos);
      CHECK(msg.find("contracting") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(resolve(parse_config("regime: contracting\ntau_end: 1\n")), ConfigError);
  CHECK_THROWS_AS(resolve(parse_config("checkpoints: [4, 2]\ntau_end: 8\n")), ConfigError);
  CHECK_THROWS_AS(resolve(parse_config("checkpoints: [16]\ntau_end: 8\n")), ConfigError);
  CHECK_THROWS_AS(resolve(parse_config("cells: 4\nic_table: [0, 1]\n")), ConfigError);
  CHECK_THROWS_AS(resolve(parse_config("preset: paper2d\ndimension: 1\n")), ConfigError);
  CHECK_THROWS_AS(resolve(parse_config("dimension: 2\nlx: 1\nly: 2\nnx: 10\nny: 10\n")),
                  ConfigError);
  CHECK_THROWS_AS(resolve(parse_config("max_steps: 0\n")), ConfigError);
  CHECK_THROWS_AS(parse_config("- 1\n- 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("kappa: fast\n"), ConfigError);
}

TEST_CASE("step1d preset") {
  const auto c = resolve(parse_config("preset: step1d\n"));
  CHECK(c.initial_condition == Preset::Step1D);
  CHECK(c.length == doctest::Approx(std::numbers::pi));
  const auto run = make_run_1d(c);
  const Grid1D& grid = run.scheme.grid;
  for (int j = 0; j < grid.cells(); ++j) {
    const double y = grid.center(j);
    CHECK(run.initial[j] == ((y >= 0.666 && y < 1.5) ? 0.8 : 0.0));
  }
}

TEST_CASE("file values override the preset and grid override parses") {
  auto in = parse_config("preset: sine1d_a\nkappa: 1.5\n");
  apply_grid_override(in, "256");
  auto c = resolve(in);
  CHECK(c.kappa == 1.5);
  CHECK(c.cells == 256);
  CHECK(c.initial_condition == Preset::Sine1DA);

  auto in2 = parse_config("preset: paper2d\n");
  apply_grid_override(in2, "64x64");
  c = resolve(in2);
  CHECK(c.nx == 64);
  CHECK(c.ny == 64);
  CHECK(c.grid_label() == "64x64");
  CHECK_THROWS_AS(apply_grid_override(in2, "64y64"), ConfigError);
}

TEST_CASE("snapshot csv format") {
  auto c = resolve(parse_config("cells: 4\nlength: 1\n"));
  const std::vector<double> v{0.1, -0.2, 0.0, 1.0 / 3.0};
  const auto text = snapshot_csv(c, 2.0, v);
  const auto rows = lines(text);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "# tau = 2");
  CHECK(rows[1] == "# kappa = 2");
  CHECK(rows[2] == "# regime = expanding");
  CHECK(rows[3] == "# grid = 4");
  CHECK(rows[4] == "# scheme = 2S4T");
  CHECK(rows[5] == "y,v,w");
  CHECK(rows[6] == "0.125,0.10000000000000001,0.40000000000000002");
  CHECK(rows[9] == "0.875,0.33333333333333331,1.3333333333333333");
  CHECK(std::stod("0.33333333333333331") == 1.0 / 3.0);

  auto c2 = resolve(parse_config("dimension: 2\nregime: contracting\nlx: 1\nly: 1\nnx: 4\nny: 4\n"));
  std::vector<double> v2(16, 0.0);
  v2[1] = 1.0;
  const auto rows2 = lines(snapshot_csv(c2, -0.5, v2));
  CHECK(rows2[2] == "# regime = contracting");
  CHECK(rows2[3] == "# grid = 4x4");
  CHECK(rows2[4] == "# scheme = 2S3T");
  CHECK(rows2[5] == "x,y,v,w");
  CHECK(rows2[6] == "0.125,0.125,0,0");
  CHECK(rows2[7] == "0.375,0.125,1,nan");
  CHECK(rows2.size() == 22);
}

TEST_CASE("golden manifests") {
  for (const std::string name : {"sine1d_a", "paper2d"}) {
    CAPTURE(name);
    const auto c = resolve(parse_config("preset: " + name + "\n"));
    auto m = run_manifest(c, RunStats{}, nlohmann::json::array());
    nlohmann::json guarded{{"config", m["config"]}, {"scheme", m["scheme"]}, {"design", m["design"]}};
    const auto path = fs::path(COSMOBURGERS_GOLDEN_DIR) / ("manifest_" + name + ".json");
    REQUIRE(fs::exists(path));
    CHECK(guarded == nlohmann::json::parse(slurp(path)));
  }
}

TEST_CASE("zero IC run writes one csv of zeros per checkpoint") {
  const auto dir = scratch("zero");
  const auto c = resolve(parse_config("regime: flat\ncells: 16\ncheckpoints: [0.5, 1.0]\n"));
  const auto manifest = cmd_run(c, dir);
  CHECK(fs::exists(dir / "manifest.json"));
  CHECK(fs::exists(dir / "snapshot_000.csv"));
  CHECK(fs::exists(dir / "snapshot_001.csv"));
  CHECK_FALSE(fs::exists(dir / "snapshot_002.csv"));
  CHECK_FALSE(fs::exists(dir / "initial.csv"));
  for (const char* f : {"snapshot_000.csv", "snapshot_001.csv"}) {
    const auto v = csv_values(slurp(dir / f));
    CHECK(v.size() == 16);
    for (double x : v) CHECK(x == 0.0);
  }
  const auto on_disk = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(on_disk["outputs"].size() == 2);
  CHECK(on_disk.contains("version"));
  CHECK(on_disk.contains("wall_time_seconds"));
  CHECK(on_disk["steps"].get<long>() > 0);
  CHECK(on_disk["design"]["boundary"] == "outflow");

  cmd_run(c, dir, 1, true);
  CHECK(fs::exists(dir / "initial.csv"));
}

TEST_CASE("constant IC run matches the closed form") {
  const auto dir = scratch("constant");
  const auto c = resolve(
      parse_config("preset: constant\nic_value: 0.8\ncells: 1000\ncheckpoints: [2, 3]\ntau_end: 5\n"));
  cmd_run(c, dir);
  const auto bg = c.background();
  const double taus[] = {2.0, 3.0, 5.0};
  for (int i = 0; i < 3; ++i) {
    const auto v = csv_values(slurp(dir / fmt::format("snapshot_{:03}.csv", i)));
    const double exact = homogeneous_solution(0.8, 1.0, taus[i], bg);
    for (double x : v) CHECK(std::abs(x - exact) <= 1e-8);
  }
}

TEST_CASE("reruns are byte-identical") {
  const auto a = scratch("rerun_a");
  const auto b = scratch("rerun_b");
  auto in = parse_config("preset: paper2d\ntau_end: 2\n");
  apply_grid_override(in, "32x32");
  const auto c = resolve(in);
  cmd_run(c, a, 1);
  cmd_run(c, b, 4);
  for (const auto& entry : fs::directory_iterator(a)) {
    if (entry.path().extension() != ".csv") continue;
    CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
  }
}

TEST_CASE("homogeneous table") {
  const auto ex = Background::expanding(2.0);
  const auto rows = lines(homogeneous_table(0.8, ex, {1.0, 2.0}));
  CHECK(rows[3] == "tau,v,w");
  const auto cut = [](const std::string& row, int field) {
    std::istringstream in(row);
    std::string item;
    for (int i = 0; i <= field; ++i) std::getline(in, item, ',');
    return std::stod(item);
  };
  CHECK(cut(rows[4], 1) == 0.8);
  CHECK(cut(rows[5], 1) == doctest::Approx(0.316228).epsilon(1e-6));
  const auto neg = lines(homogeneous_table(-0.8, ex, {2.0}));
  CHECK(cut(neg[4], 1) == -cut(rows[5], 1));
  CHECK(cut(neg[4], 2) == -cut(rows[5], 2));
  for (const auto& row : lines(homogeneous_table(0.0, Background::contracting(2.0), {-0.5, -0.1}))) {
    if (row[0] == '-') CHECK(cut(row, 1) == 0.0);
  }
  CHECK_THROWS_AS(homogeneous_table(1.0, ex, {2.0}), DomainError);
}

TEST_CASE("converge") {
  const auto flat = resolve(parse_config(
      "regime: flat\npreset: sine1d_a\nlength: 3.141592653589793\ntau_end: 0.1\n"));
  SUBCASE("identical grids give a zero row") {
    const auto t = converge(flat, {100, 200}, std::nullopt);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].l1 > 0.0);
    CHECK(t.rows[1].l1 == 0.0);
    CHECK(t.rows[1].l2 == 0.0);
    CHECK(t.reference_grid == "200");
    REQUIRE(t.monotone.size() == 1);
    CHECK(t.monotone[0].second);
  }
  SUBCASE("second order self-convergence") {
    const auto t = converge(flat, {50, 100, 200, 400, 800}, std::nullopt, 2);
    for (int i = 0; i + 1 < 4; ++i) CHECK(t.rows[i].l1 / t.rows[i + 1].l1 >= 1.7);
  }
  SUBCASE("constant data agree on every grid") {
    const auto c = resolve(parse_config("preset: constant\ntau_end: 3\n"));
    for (const auto& r : converge(c, {500, 1000, 2000}, std::nullopt).rows) CHECK(r.l1 <= 1e-8);
  }
  CHECK_THROWS_AS(converge(flat, {100, 150}, std::nullopt), ConfigError);
  CHECK_THROWS_AS(converge(flat, {200, 100}, std::nullopt), ConfigError);
  CHECK_THROWS_AS(converge(flat, {100}, std::nullopt), ConfigError);

  const auto dir = scratch("converge");
  cmd_converge(flat, {100, 200}, std::nullopt, dir);
  const auto rows = lines(slurp(dir / "converge.csv"));
  CHECK(rows[1] == "grid,tau,l1,l2");
  CHECK(rows.size() == 4);
}

TEST_CASE("scheme matrix") {
  const auto zero = resolve(parse_config("regime: flat\ncells: 64\n"));
  const auto rows = scheme_matrix(zero);
  CHECK(rows.size() == 4);
  for (const auto& r : rows) CHECK(r.l1 == 0.0);
  CHECK(rows.back().scheme == "2S4T");

  auto in = parse_config("preset: paper2d\ntau_end: 4\n");
  apply_grid_override(in, "40x40");
  const auto m = scheme_matrix(resolve(in), 2);
  REQUIRE(m.size() == 8);
  CHECK(m[0].scheme == "1S1T");
  CHECK(m[6].scheme == "2S4T");
  CHECK(m[6].l1 == 0.0);
  CHECK(m[7].l1 == 0.0);
  CHECK(m[2].l1 < m[0].l1);
}

TEST_CASE("compare diagonal") {
  const auto dir = scratch("diagonal");
  auto in = parse_config("preset: paper2d\ntau_end: 4\n");
  apply_grid_override(in, "32x32");
  const auto rows = cmd_compare_diagonal(resolve(in), dir);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].l1_v == 0.0);
  for (const auto& r : rows) CHECK(std::isfinite(r.l1_v));
  CHECK(fs::exists(dir / "diagonal_002.csv"));
  CHECK_THROWS_AS(cmd_compare_diagonal(resolve(parse_config("cells: 8\n")), dir), ConfigError);
}
