#include "cosmoburgers/app/output.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "cosmoburgers/diagnostics.hpp"
#include "cosmoburgers/errors.hpp"

#ifndef COSMOBURGERS_VERSION
#define COSMOBURGERS_VERSION "unknown"
#endif

namespace cosmoburgers::app {

std::string version() { return COSMOBURGERS_VERSION; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  return fmt::format("{:.17g}", x);
}

std::string snapshot_csv(const RunConfig& config, double tau, std::span<const double> values) {
  const Background bg = config.background();
  const auto w = rescale(values, tau, bg);
  std::string out;
  out += fmt::format("# tau = {}\n", format_number(tau));
  out += fmt::format("# kappa = {}\n", format_number(config.kappa));
  out += fmt::format("# regime = {}\n", to_string(config.regime));
  out += fmt::format("# grid = {}\n", config.grid_label());
  out += fmt::format("# scheme = {}\n",
                     scheme_label(config.policy.space_order, config.policy.time_order));
  if (config.dimension == 1) {
    const Grid1D grid(config.length, config.cells);
    out += "y,v,w\n";
    for (int j = 0; j < grid.cells(); ++j) {
      out += fmt::format("{},{},{}\n", format_number(grid.center(j)), format_number(values[j]),
                         format_number(w[j]));
    }
  } else {
    const Grid2D grid(config.lx, config.ly, config.nx, config.ny);
    out += "x,y,v,w\n";
    for (int k = 0; k < grid.ny(); ++k) {
      for (int j = 0; j < grid.nx(); ++j) {
        const auto i = grid.index(j, k);
        out += fmt::format("{},{},{},{}\n", format_number(grid.x_center(j)),
                           format_number(grid.y_center(k)), format_number(values[i]),
                           format_number(w[i]));
      }
    }
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  file << text;
  if (!file) throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
}

nlohmann::json design_toggles(const RunConfig& config) {
  nlohmann::json t;
  t["boundary"] = to_string(config.boundary);
  t["ghost_width"] = kGhostWidth;
  t["limiter"] = "minmod_mc";
  t["riemann_solver"] = "godunov_exact";
  t["source_evaluation"] = "unsplit_stage_time";
  t["cfl_multiplies"] = config.dimension == 1 ? "min_of_all_bounds" : "cfl_bound_only";
  t["extra_rule"] = to_string(config.policy.extra_rule);
  t["clamping"] = "none";
  t["checkpoint_landing"] = "shorten_step";
  t["landing_tolerance"] = 1e-10;
  t["step_budget"] = config.max_steps;
  t["jump_threshold_factor"] = kJumpThresholdFactor;
  t["jump_merge_adjacent"] = true;
  t["contracting_w_invalid"] = "nan";
  t["diagonal_coordinate"] = "cell_center";
  if (config.dimension == 2) {
    t["cfl_speed"] = "interface_traces";
    t["contracting_shrink_history"] = "proposed_dt";
  }
  return t;
}

nlohmann::json run_manifest(const RunConfig& config, const RunStats& stats,
                            const nlohmann::json& outputs) {
  nlohmann::json m;
  m["config"] = to_json(config);
  m["scheme"] = scheme_label(config.policy.space_order, config.policy.time_order);
  m["design"] = design_toggles(config);
  m["steps"] = stats.steps;
  m["dt"] = {{"min", stats.steps > 0 ? stats.dt_min : 0.0},
             {"max", stats.dt_max},
             {"mean", stats.dt_mean()}};
  m["outputs"] = outputs;
  return m;
}

}  // namespace cosmoburgers::app
