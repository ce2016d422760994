#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cosmoburgers/app/config.hpp"
#include "cosmoburgers/executor.hpp"
#include "cosmoburgers/run.hpp"

namespace cosmoburgers::app {

/// Snapshots of one run, led by the initial state at tau0.
struct Simulation {
  std::vector<Snapshot> snapshots;
  RunStats stats;
};

/// Runs a resolved config. 2D runs use `ex` inside each step.
Simulation simulate(const RunConfig& config, const Executor& ex = serial_executor());

/// Writes snapshot_NNN.csv for every output time plus manifest.json into
/// out_dir, and initial.csv for the state at tau0 when asked.
nlohmann::json cmd_run(const RunConfig& config, const std::filesystem::path& out_dir,
                       int threads = 1, bool write_initial = false);

struct ConvergenceRow {
  std::string grid;
  double tau = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

struct ConvergenceTable {
  std::string reference_grid;
  std::string reference_scheme;
  std::vector<ConvergenceRow> rows;  // grouped by grid, coarse first
  std::vector<std::pair<double, bool>> monotone;  // per tau: L1 strictly decreasing
};

/// Runs the config on each grid (cells in 1D, n x n in 2D) and compares
/// against the last, finest grid. The reference uses `reference_policy`
/// when given, else the config's own scheme. Throws ConfigError unless the
/// grids increase and divide the finest one.
ConvergenceTable converge(const RunConfig& config, const std::vector<int>& grids,
                          const std::optional<StepPolicy>& reference_policy, int threads = 1);

/// converge() plus converge.csv and manifest.json in out_dir.
ConvergenceTable cmd_converge(const RunConfig& config, const std::vector<int>& grids,
                              const std::optional<StepPolicy>& reference_policy,
                              const std::filesystem::path& out_dir, int threads = 1);

struct SchemeMatrixRow {
  std::string scheme;
  double tau = 0.0;
  double l1 = 0.0;  // against the best scheme
};

/// Runs {1S,2S} x {1T, high T} and reports L1 against 2S + high T, where
/// high T is the config's time order (RK4 if the config asks for Euler).
std::vector<SchemeMatrixRow> scheme_matrix(const RunConfig& config, int threads = 1);
std::vector<SchemeMatrixRow> cmd_scheme_matrix(const RunConfig& config,
                                               const std::filesystem::path& out_dir,
                                               int threads = 1);

/// CSV with columns tau,v,w of the closed-form homogeneous solution.
std::string homogeneous_table(double v0, const Background& bg, const std::vector<double>& taus);
void cmd_homogeneous(double v0, const Background& bg, const std::vector<double>& taus,
                     const std::filesystem::path& out_dir);

struct DiagonalRow {
  double tau = 0.0;
  double l1_v = 0.0;
  double l1_w = 0.0;
};

/// Runs a square 2D config and a 1D run on its diagonal (length sqrt(lx^2 +
/// ly^2), nx cells, quadratic flux, initial data taken from the 2D diagonal)
/// and compares the diagonal profile with the 1D field at every output time.
std::vector<DiagonalRow> cmd_compare_diagonal(const RunConfig& config,
                                              const std::filesystem::path& out_dir,
                                              int threads = 1);

}  // namespace cosmoburgers::app
