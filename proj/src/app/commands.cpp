#include "cosmoburgers/app/commands.hpp"

#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "cosmoburgers/app/output.hpp"
#include "cosmoburgers/diagnostics.hpp"
#include "cosmoburgers/errors.hpp"
#include "cosmoburgers/solver1d.hpp"
#include "cosmoburgers/solver2d.hpp"

namespace cosmoburgers::app {

namespace {

namespace fs = std::filesystem;

void prepare(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error(fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
}

void write_manifest(const fs::path& dir, nlohmann::json manifest, double wall_seconds) {
  manifest["version"] = version();
  manifest["wall_time_seconds"] = wall_seconds;
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RunConfig with_grid(RunConfig config, int n) {
  if (config.dimension == 1) {
    config.cells = n;
  } else {
    config.nx = config.ny = n;
  }
  return config;
}

double cell_measure(const RunConfig& c) {
  return c.dimension == 1 ? c.length / c.cells : (c.lx / c.nx) * (c.ly / c.ny);
}

std::vector<double> restrict_to(const RunConfig& fine, const RunConfig& coarse,
                                std::span<const double> values) {
  if (fine.dimension == 1) return restrict_block_average(values, coarse.cells);
  return restrict_block_average(values, fine.nx, fine.ny, coarse.nx, coarse.ny);
}

/// Runs independent configs on a pool; each run itself is serial.
std::vector<Simulation> simulate_all(const std::vector<RunConfig>& configs, int threads) {
  std::vector<Simulation> out(configs.size());
  const Executor pool(threads);
  pool.for_ranges(configs.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = simulate(configs[i]);
  });
  return out;
}

}  // namespace

Simulation simulate(const RunConfig& config, const Executor& ex) {
  Simulation sim;
  if (config.dimension == 1) {
    const auto run = make_run_1d(config);
    auto series = run_1d(run);
    sim.snapshots.push_back(
        {config.tau0, run.initial, diagnose_1d(run.initial, config.tau0, run.scheme.grid)});
    for (auto& s : series.snapshots) sim.snapshots.push_back(std::move(s));
    sim.stats = series.stats;
  } else {
    const auto run = make_run_2d(config);
    auto series = run_2d(run, ex);
    sim.snapshots.push_back(
        {config.tau0, run.initial, diagnose_2d(run.initial, config.tau0, run.scheme.grid)});
    for (auto& s : series.snapshots) sim.snapshots.push_back(std::move(s));
    sim.stats = series.stats;
  }
  return sim;
}

nlohmann::json cmd_run(const RunConfig& config, const fs::path& out_dir, int threads,
                       bool write_initial) {
  const auto start = std::chrono::steady_clock::now();
  prepare(out_dir);
  const Executor ex(threads);
  const Simulation sim = simulate(config, ex);

  nlohmann::json outputs = nlohmann::json::array();
  for (std::size_t i = write_initial ? 0 : 1; i < sim.snapshots.size(); ++i) {
    const auto& snap = sim.snapshots[i];
    const std::string name =
        i == 0 ? std::string("initial.csv") : fmt::format("snapshot_{:03}.csv", i - 1);
    write_text(out_dir / name, snapshot_csv(config, snap.tau, snap.values));
    const auto& d = snap.diagnostics;
    nlohmann::json entry{{"file", name},
                         {"tau", snap.tau},
                         {"max_abs_v", d.max_abs_v},
                         {"overshoot", d.overshoot},
                         {"jump_count", d.jump_count},
                         {"tv_x", d.tv_x}};
    if (d.l2_norm) entry["l2_norm"] = *d.l2_norm;
    if (d.tv_y) entry["tv_y"] = *d.tv_y;
    outputs.push_back(std::move(entry));
  }
  auto manifest = run_manifest(config, sim.stats, outputs);
  manifest["command"] = "run";
  manifest["threads"] = threads;
  write_manifest(out_dir, manifest, seconds_since(start));
  return manifest;
}

ConvergenceTable converge(const RunConfig& config, const std::vector<int>& grids,
                          const std::optional<StepPolicy>& reference_policy, int threads) {
  if (grids.size() < 2) throw ConfigError("convergence needs at least two grids");
  for (std::size_t i = 1; i < grids.size(); ++i) {
    if (grids[i] <= grids[i - 1]) throw ConfigError("convergence grids must increase");
  }
  const int finest = grids.back();
  for (int n : grids) {
    if (n < 4 || finest % n != 0) {
      throw ConfigError(fmt::format("grid {} does not nest in the reference grid {}", n, finest));
    }
  }

  std::vector<RunConfig> configs;
  for (int n : grids) configs.push_back(with_grid(config, n));
  RunConfig reference = with_grid(config, finest);
  if (reference_policy) reference.policy = *reference_policy;
  configs.push_back(reference);

  const auto sims = simulate_all(configs, threads);
  const Simulation& ref = sims.back();

  ConvergenceTable table;
  table.reference_grid = reference.grid_label();
  table.reference_scheme = scheme_label(reference.policy.space_order, reference.policy.time_order);
  const std::size_t outputs = ref.snapshots.size();
  std::vector<std::vector<double>> l1_by_tau(outputs);
  for (std::size_t g = 0; g < grids.size(); ++g) {
    for (std::size_t i = 1; i < outputs; ++i) {
      const auto& snap = sims[g].snapshots[i];
      const auto r = restrict_to(reference, configs[g], ref.snapshots[i].values);
      const double h = cell_measure(configs[g]);
      ConvergenceRow row{configs[g].grid_label(), snap.tau, norm_l1(snap.values, r, h),
                         norm_l2(snap.values, r, h)};
      l1_by_tau[i].push_back(row.l1);
      table.rows.push_back(row);
    }
  }
  for (std::size_t i = 1; i < outputs; ++i) {
    bool decreasing = true;
    for (std::size_t g = 1; g < l1_by_tau[i].size(); ++g) {
      decreasing = decreasing && l1_by_tau[i][g] < l1_by_tau[i][g - 1];
    }
    table.monotone.emplace_back(ref.snapshots[i].tau, decreasing);
  }
  return table;
}

ConvergenceTable cmd_converge(const RunConfig& config, const std::vector<int>& grids,
                              const std::optional<StepPolicy>& reference_policy,
                              const fs::path& out_dir, int threads) {
  const auto start = std::chrono::steady_clock::now();
  prepare(out_dir);
  const auto table = converge(config, grids, reference_policy, threads);
  std::string csv = fmt::format("# reference = {} {}\ngrid,tau,l1,l2\n", table.reference_grid,
                                table.reference_scheme);
  for (const auto& r : table.rows) {
    csv += fmt::format("{},{},{},{}\n", r.grid, format_number(r.tau), format_number(r.l1),
                       format_number(r.l2));
  }
  write_text(out_dir / "converge.csv", csv);

  nlohmann::json manifest;
  manifest["command"] = "converge";
  manifest["config"] = to_json(config);
  manifest["design"] = design_toggles(config);
  manifest["grids"] = grids;
  manifest["reference"] = {{"grid", table.reference_grid}, {"scheme", table.reference_scheme}};
  nlohmann::json flags = nlohmann::json::array();
  for (const auto& [tau, ok] : table.monotone) flags.push_back({{"tau", tau}, {"monotone", ok}});
  manifest["monotone"] = flags;
  manifest["outputs"] = {"converge.csv"};
  write_manifest(out_dir, manifest, seconds_since(start));
  return table;
}

std::vector<SchemeMatrixRow> scheme_matrix(const RunConfig& config, int threads) {
  const TimeOrder high =
      config.policy.time_order == TimeOrder::Euler ? TimeOrder::Rk4 : config.policy.time_order;
  const std::vector<std::pair<SpaceOrder, TimeOrder>> combos{{SpaceOrder::First, TimeOrder::Euler},
                                                             {SpaceOrder::First, high},
                                                             {SpaceOrder::Second, TimeOrder::Euler},
                                                             {SpaceOrder::Second, high}};
  std::vector<RunConfig> configs;
  for (const auto& [space, time] : combos) {
    RunConfig c = config;
    c.policy.space_order = space;
    c.policy.time_order = time;
    configs.push_back(c);
  }
  const auto sims = simulate_all(configs, threads);
  const Simulation& best = sims.back();
  const double h = cell_measure(config);

  std::vector<SchemeMatrixRow> rows;
  for (std::size_t s = 0; s < sims.size(); ++s) {
    const std::string label(scheme_label(combos[s].first, combos[s].second));
    for (std::size_t i = 1; i < best.snapshots.size(); ++i) {
      rows.push_back({label, best.snapshots[i].tau,
                      norm_l1(sims[s].snapshots[i].values, best.snapshots[i].values, h)});
    }
  }
  return rows;
}

std::vector<SchemeMatrixRow> cmd_scheme_matrix(const RunConfig& config, const fs::path& out_dir,
                                               int threads) {
  const auto start = std::chrono::steady_clock::now();
  prepare(out_dir);
  const auto rows = scheme_matrix(config, threads);
  std::string csv = "scheme,tau,l1\n";
  for (const auto& r : rows) {
    csv += fmt::format("{},{},{}\n", r.scheme, format_number(r.tau), format_number(r.l1));
  }
  write_text(out_dir / "scheme_matrix.csv", csv);
  nlohmann::json manifest;
  manifest["command"] = "scheme-matrix";
  manifest["config"] = to_json(config);
  manifest["design"] = design_toggles(config);
  manifest["best"] = rows.empty() ? "" : rows.back().scheme;
  manifest["outputs"] = {"scheme_matrix.csv"};
  write_manifest(out_dir, manifest, seconds_since(start));
  return rows;
}

std::string homogeneous_table(double v0, const Background& bg, const std::vector<double>& taus) {
  std::string csv = fmt::format("# v0 = {}\n# kappa = {}\n# regime = {}\ntau,v,w\n",
                                format_number(v0), format_number(bg.kappa()),
                                to_string(bg.regime()));
  for (double tau : taus) {
    const double v = homogeneous_solution(v0, bg.tau0(), tau, bg);
    const std::vector<double> one{v};
    csv += fmt::format("{},{},{}\n", format_number(tau), format_number(v),
                       format_number(rescale(one, tau, bg)[0]));
  }
  return csv;
}

void cmd_homogeneous(double v0, const Background& bg, const std::vector<double>& taus,
                     const fs::path& out_dir) {
  prepare(out_dir);
  write_text(out_dir / "homogeneous.csv", homogeneous_table(v0, bg, taus));
}

std::vector<DiagonalRow> cmd_compare_diagonal(const RunConfig& config, const fs::path& out_dir,
                                              int threads) {
  const auto start = std::chrono::steady_clock::now();
  if (config.dimension != 2 || config.nx != config.ny ||
      !Grid2D(config.lx, config.ly, config.nx, config.ny).is_square_spacing()) {
    throw ConfigError("compare-diagonal needs a 2D config with nx == ny and dx == dy");
  }
  prepare(out_dir);
  const Grid2D grid(config.lx, config.ly, config.nx, config.ny);
  const auto initial_2d = make_run_2d(config).initial;

  RunConfig line = config;
  line.dimension = 1;
  line.length = std::hypot(config.lx, config.ly);
  line.cells = config.nx;
  line.flux = FluxShape::Quadratic;
  line.ic_table = diagonal_extract(grid, initial_2d).v;

  const Executor ex(threads);
  const Simulation plane = simulate(config, ex);
  const Simulation diag = simulate(line);
  const Background bg = config.background();
  const double ds = line.length / line.cells;

  std::vector<DiagonalRow> rows;
  std::string table = "tau,l1_v,l1_w\n";
  for (std::size_t i = 0; i < plane.snapshots.size(); ++i) {
    const double tau = plane.snapshots[i].tau;
    const auto profile = diagonal_extract(grid, plane.snapshots[i].values);
    const auto& v1 = diag.snapshots[i].values;
    const auto w2 = rescale(profile.v, tau, bg);
    const auto w1 = rescale(v1, tau, bg);
    rows.push_back({tau, norm_l1(profile.v, v1, ds), norm_l1(w2, w1, ds)});
    table += fmt::format("{},{},{}\n", format_number(tau), format_number(rows.back().l1_v),
                         format_number(rows.back().l1_w));

    std::string csv = fmt::format("# tau = {}\n# kappa = {}\n# regime = {}\n# grid = {}\n",
                                  format_number(tau), format_number(config.kappa),
                                  to_string(config.regime), config.grid_label());
    csv += "s,v2d,v1d,w2d,w1d\n";
    for (std::size_t j = 0; j < v1.size(); ++j) {
      csv += fmt::format("{},{},{},{},{}\n", format_number(profile.s[j]),
                         format_number(profile.v[j]), format_number(v1[j]), format_number(w2[j]),
                         format_number(w1[j]));
    }
    write_text(out_dir / fmt::format("diagonal_{:03}.csv", i), csv);
  }
  write_text(out_dir / "compare_diagonal.csv", table);

  nlohmann::json manifest;
  manifest["command"] = "compare-diagonal";
  manifest["config"] = to_json(config);
  manifest["line_config"] = to_json(line);
  manifest["design"] = design_toggles(config);
  manifest["steps"] = {{"2d", plane.stats.steps}, {"1d", diag.stats.steps}};
  manifest["outputs"] = {"compare_diagonal.csv"};
  write_manifest(out_dir, manifest, seconds_since(start));
  return rows;
}

}  // namespace cosmoburgers::app
