#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cosmoburgers/grid.hpp"
#include "cosmoburgers/initial_conditions.hpp"
#include "cosmoburgers/model.hpp"
#include "cosmoburgers/scheme.hpp"
#include "cosmoburgers/solver1d.hpp"
#include "cosmoburgers/solver2d.hpp"

namespace cosmoburgers::app {

/// Config as written by the user. Unset fields take dimension- and
/// regime-dependent defaults in resolve().
struct ConfigInput {
  std::optional<int> dimension;
  std::optional<Regime> regime;
  std::optional<double> kappa;
  std::optional<double> tau0;
  std::optional<FluxShape> flux;
  std::optional<double> beta;
  std::optional<double> length;
  std::optional<int> cells;
  std::optional<double> lx, ly;
  std::optional<int> nx, ny;
  std::optional<double> cfl;
  std::optional<SpaceOrder> space_order;
  std::optional<TimeOrder> time_order;
  std::optional<ExtraRule> extra_rule;
  std::optional<BoundaryRule> boundary;
  std::optional<Preset> initial_condition;
  std::optional<double> ic_value;
  std::optional<std::vector<double>> ic_table;
  std::optional<std::vector<double>> checkpoints;
  std::optional<double> tau_end;
  std::optional<long> max_steps;
};

/// Fully specified and validated run description.
struct RunConfig {
  int dimension = 1;
  Regime regime = Regime::Expanding;
  double kappa = 2.0;
  double tau0 = 1.0;
  FluxShape flux = FluxShape::Quadratic;  // shape of g; f is always quadratic
  double beta = ScalarFlux::kDefaultBeta;
  double length = 0.0;
  int cells = 0;
  double lx = 0.0, ly = 0.0;
  int nx = 0, ny = 0;
  StepPolicy policy;
  BoundaryRule boundary = BoundaryRule::Outflow;
  Preset initial_condition = Preset::Zero;
  double ic_value = 0.8;
  std::vector<double> ic_table;  // overrides the preset when non-empty
  std::vector<double> checkpoints;
  double tau_end = 0.0;
  long max_steps = kDefaultStepBudget;

  Background background() const;
  ScalarFlux y_flux() const;
  std::string grid_label() const;  // "1024" or "200x200"
};

/// Parses a YAML document. Unknown keys and bad values raise ConfigError
/// naming the line.
ConfigInput parse_config(std::string_view text);
ConfigInput load_config(const std::string& path);

/// Defaults for a named preset (dimension, background, grid, output times).
ConfigInput preset_defaults(Preset preset);

/// Fields set in `top` win over those in `base`.
ConfigInput merge(const ConfigInput& base, const ConfigInput& top);

/// Fills defaults and validates. Throws ConfigError.
RunConfig resolve(const ConfigInput& input);

/// Parses "1024" or "200x200" into the grid fields of `input`.
void apply_grid_override(ConfigInput& input, std::string_view grid);

RunConfig1D make_run_1d(const RunConfig& config);
RunConfig2D make_run_2d(const RunConfig& config);

nlohmann::json to_json(const RunConfig& config);

std::optional<Regime> regime_from_string(std::string_view name);
std::optional<FluxShape> flux_from_string(std::string_view name);
std::optional<SpaceOrder> space_order_from_string(std::string_view name);
std::optional<TimeOrder> time_order_from_string(std::string_view name);
std::optional<ExtraRule> extra_rule_from_string(std::string_view name);
std::optional<BoundaryRule> boundary_from_string(std::string_view name);

}  // namespace cosmoburgers::app
