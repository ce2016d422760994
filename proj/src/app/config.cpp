#include "cosmoburgers/app/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "cosmoburgers/errors.hpp"

namespace cosmoburgers::app {

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(std::string_view name, const std::array<Enum, N>& values) {
  for (Enum e : values) {
    if (to_string(e) == name) return e;
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string choices(const std::array<Enum, N>& values) {
  std::string out;
  for (Enum e : values) {
    if (!out.empty()) out += ", ";
    out += to_string(e);
  }
  return out;
}

constexpr std::array kRegimes{Regime::Expanding, Regime::Contracting, Regime::Flat};
constexpr std::array kFluxes{FluxShape::Quadratic, FluxShape::Cubic, FluxShape::Mixed};
constexpr std::array kSpaceOrders{SpaceOrder::First, SpaceOrder::Second};
constexpr std::array kTimeOrders{TimeOrder::Euler, TimeOrder::SspRk3, TimeOrder::Rk4};
constexpr std::array kExtraRules{ExtraRule::None, ExtraRule::KappaScaled};
constexpr std::array kBoundaries{BoundaryRule::Outflow, BoundaryRule::Periodic};
constexpr std::array kPresets{Preset::Step1D, Preset::Sine1DA, Preset::Sine1DB,
                              Preset::Paper2D, Preset::Paper2DDiagonal, Preset::Constant,
                              Preset::Zero};

const double kPaperSide = std::numbers::pi / std::numbers::sqrt2;

std::string where(const YAML::Node& node) {
  const auto mark = node.Mark();
  if (mark.line < 0) return "config";
  return fmt::format("line {}", mark.line + 1);
}

template <typename T>
T scalar(const YAML::Node& node, std::string_view key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(fmt::format("{}: bad value for '{}'", where(node), key));
  }
}

template <typename Enum, std::size_t N>
Enum enum_value(const YAML::Node& node, std::string_view key, const std::array<Enum, N>& values) {
  const auto text = scalar<std::string>(node, key);
  if (auto e = lookup(text, values)) return *e;
  throw ConfigError(fmt::format("{}: '{}' is not a valid {} (expected one of: {})",
                                where(node), text, key, choices(values)));
}

std::vector<double> number_list(const YAML::Node& node, std::string_view key) {
  if (!node.IsSequence()) {
    throw ConfigError(fmt::format("{}: '{}' must be a list of numbers", where(node), key));
  }
  std::vector<double> out;
  for (const auto& item : node) out.push_back(scalar<double>(item, key));
  return out;
}

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

}  // namespace

std::optional<Regime> regime_from_string(std::string_view name) { return lookup(name, kRegimes); }
std::optional<FluxShape> flux_from_string(std::string_view name) { return lookup(name, kFluxes); }
std::optional<SpaceOrder> space_order_from_string(std::string_view name) {
  return lookup(name, kSpaceOrders);
}
std::optional<TimeOrder> time_order_from_string(std::string_view name) {
  return lookup(name, kTimeOrders);
}
std::optional<ExtraRule> extra_rule_from_string(std::string_view name) {
  return lookup(name, kExtraRules);
}
std::optional<BoundaryRule> boundary_from_string(std::string_view name) {
  return lookup(name, kBoundaries);
}

ConfigInput preset_defaults(Preset preset) {
  ConfigInput in;
  in.initial_condition = preset;
  switch (preset) {
    case Preset::Step1D:
      in.dimension = 1;
      in.regime = Regime::Expanding;
      in.cells = 1000;
      break;
    case Preset::Sine1DA:
      in.dimension = 1;
      in.regime = Regime::Expanding;
      in.cells = 1024;
      break;
    case Preset::Sine1DB:
      in.dimension = 1;
      in.regime = Regime::Expanding;
      in.kappa = 1.0;
      in.cells = 1024;
      break;
    case Preset::Paper2D:
      in.dimension = 2;
      in.regime = Regime::Expanding;
      in.nx = in.ny = 200;
      break;
    case Preset::Paper2DDiagonal:
      in.dimension = 1;
      in.regime = Regime::Expanding;
      in.cells = 200;
      break;
    case Preset::Constant:
      in.dimension = 1;
      in.regime = Regime::Expanding;
      in.cells = 100;
      in.ic_value = 0.8;
      break;
    case Preset::Zero:
      in.dimension = 1;
      in.regime = Regime::Flat;
      in.cells = 100;
      break;
  }
  return in;
}

ConfigInput merge(const ConfigInput& base, const ConfigInput& top) {
  ConfigInput out = base;
  take(out.dimension, top.dimension);
  take(out.regime, top.regime);
  take(out.kappa, top.kappa);
  take(out.tau0, top.tau0);
  take(out.flux, top.flux);
  take(out.beta, top.beta);
  take(out.length, top.length);
  take(out.cells, top.cells);
  take(out.lx, top.lx);
  take(out.ly, top.ly);
  take(out.nx, top.nx);
  take(out.ny, top.ny);
  take(out.cfl, top.cfl);
  take(out.space_order, top.space_order);
  take(out.time_order, top.time_order);
  take(out.extra_rule, top.extra_rule);
  take(out.boundary, top.boundary);
  take(out.initial_condition, top.initial_condition);
  take(out.ic_value, top.ic_value);
  take(out.ic_table, top.ic_table);
  take(out.checkpoints, top.checkpoints);
  take(out.tau_end, top.tau_end);
  take(out.max_steps, top.max_steps);
  return out;
}

ConfigInput parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(fmt::format("line {}: {}", e.mark.line + 1, e.msg));
  }
  if (root.IsNull()) return {};
  if (!root.IsMap()) throw ConfigError(fmt::format("{}: config must be a mapping", where(root)));

  ConfigInput in;
  std::optional<Preset> preset;
  using Handler = std::function<void(const YAML::Node&)>;
  const std::map<std::string, Handler, std::less<>> handlers{
      {"preset", [&](const YAML::Node& n) { preset = enum_value(n, "preset", kPresets); }},
      {"dimension", [&](const YAML::Node& n) { in.dimension = scalar<int>(n, "dimension"); }},
      {"regime", [&](const YAML::Node& n) { in.regime = enum_value(n, "regime", kRegimes); }},
      {"kappa", [&](const YAML::Node& n) { in.kappa = scalar<double>(n, "kappa"); }},
      {"tau0", [&](const YAML::Node& n) { in.tau0 = scalar<double>(n, "tau0"); }},
      {"flux", [&](const YAML::Node& n) { in.flux = enum_value(n, "flux", kFluxes); }},
      {"beta", [&](const YAML::Node& n) { in.beta = scalar<double>(n, "beta"); }},
      {"length", [&](const YAML::Node& n) { in.length = scalar<double>(n, "length"); }},
      {"cells", [&](const YAML::Node& n) { in.cells = scalar<int>(n, "cells"); }},
      {"lx", [&](const YAML::Node& n) { in.lx = scalar<double>(n, "lx"); }},
      {"ly", [&](const YAML::Node& n) { in.ly = scalar<double>(n, "ly"); }},
      {"nx", [&](const YAML::Node& n) { in.nx = scalar<int>(n, "nx"); }},
      {"ny", [&](const YAML::Node& n) { in.ny = scalar<int>(n, "ny"); }},
      {"cfl", [&](const YAML::Node& n) { in.cfl = scalar<double>(n, "cfl"); }},
      {"space_order",
       [&](const YAML::Node& n) { in.space_order = enum_value(n, "space_order", kSpaceOrders); }},
      {"time_order",
       [&](const YAML::Node& n) { in.time_order = enum_value(n, "time_order", kTimeOrders); }},
      {"extra_rule",
       [&](const YAML::Node& n) { in.extra_rule = enum_value(n, "extra_rule", kExtraRules); }},
      {"boundary",
       [&](const YAML::Node& n) { in.boundary = enum_value(n, "boundary", kBoundaries); }},
      {"initial_condition",
       [&](const YAML::Node& n) {
         in.initial_condition = enum_value(n, "initial_condition", kPresets);
       }},
      {"ic_value", [&](const YAML::Node& n) { in.ic_value = scalar<double>(n, "ic_value"); }},
      {"ic_table", [&](const YAML::Node& n) { in.ic_table = number_list(n, "ic_table"); }},
      {"checkpoints",
       [&](const YAML::Node& n) { in.checkpoints = number_list(n, "checkpoints"); }},
      {"tau_end", [&](const YAML::Node& n) { in.tau_end = scalar<double>(n, "tau_end"); }},
      {"max_steps", [&](const YAML::Node& n) { in.max_steps = scalar<long>(n, "max_steps"); }},
  };

  for (const auto& entry : root) {
    const auto key = scalar<std::string>(entry.first, "key");
    const auto it = handlers.find(key);
    if (it == handlers.end()) {
      throw ConfigError(fmt::format("{}: unknown key '{}'", where(entry.first), key));
    }
    it->second(entry.second);
  }
  return preset ? merge(preset_defaults(*preset), in) : in;
}

ConfigInput load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError(fmt::format("cannot open config file '{}'", path));
  std::stringstream buffer;
  buffer << file.rdbuf();
  try {
    return parse_config(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path, e.what()));
  }
}

void apply_grid_override(ConfigInput& input, std::string_view grid) {
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
      throw ConfigError(fmt::format("bad --grid value '{}'", grid));
    }
    return value;
  };
  const auto x = grid.find('x');
  if (x == std::string_view::npos) {
    input.cells = parse_int(grid);
    if (input.dimension.value_or(1) == 2) input.nx = input.ny = *input.cells;
  } else {
    input.nx = parse_int(grid.substr(0, x));
    input.ny = parse_int(grid.substr(x + 1));
    if (!input.dimension) input.dimension = 2;
  }
}

Background RunConfig::background() const { return Background::make(regime, kappa, tau0); }

ScalarFlux RunConfig::y_flux() const {
  switch (flux) {
    case FluxShape::Quadratic: return ScalarFlux::quadratic();
    case FluxShape::Cubic: return ScalarFlux::cubic();
    case FluxShape::Mixed: return ScalarFlux::mixed(beta);
  }
  return ScalarFlux::quadratic();
}

std::string RunConfig::grid_label() const {
  return dimension == 1 ? fmt::format("{}", cells) : fmt::format("{}x{}", nx, ny);
}

RunConfig resolve(const ConfigInput& in) {
  RunConfig c;
  c.dimension = in.dimension.value_or(1);
  if (c.dimension != 1 && c.dimension != 2) {
    throw ConfigError(fmt::format("dimension must be 1 or 2, got {}", c.dimension));
  }
  const bool two_d = c.dimension == 2;
  c.regime = in.regime.value_or(Regime::Expanding);
  c.kappa = c.regime == Regime::Flat ? 0.0 : in.kappa.value_or(2.0);
  switch (c.regime) {
    case Regime::Expanding: c.tau0 = in.tau0.value_or(1.0); break;
    case Regime::Contracting: c.tau0 = in.tau0.value_or(-1.0); break;
    case Regime::Flat: c.tau0 = in.tau0.value_or(0.0); break;
  }
  try {
    (void)c.background();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  c.flux = in.flux.value_or(FluxShape::Quadratic);
  c.beta = in.beta.value_or(ScalarFlux::kDefaultBeta);
  if (c.flux == FluxShape::Mixed && !(c.beta > 0.0 && c.beta < 1.0)) {
    throw ConfigError(fmt::format("beta must lie in (0, 1), got {}", c.beta));
  }

  if (two_d) {
    c.lx = in.lx.value_or(kPaperSide);
    c.ly = in.ly.value_or(kPaperSide);
    c.nx = in.nx.value_or(in.cells.value_or(200));
    c.ny = in.ny.value_or(c.nx);
    if (!(c.lx > 0.0 && c.ly > 0.0) || c.nx < 4 || c.ny < 4) {
      throw ConfigError("2D grid needs lx, ly > 0 and nx, ny >= 4");
    }
    if (c.regime != Regime::Flat && !Grid2D(c.lx, c.ly, c.nx, c.ny).is_square_spacing()) {
      throw ConfigError("expanding and contracting 2D runs need dx == dy");
    }
  } else {
    c.length = in.length.value_or(std::numbers::pi);
    c.cells = in.cells.value_or(1024);
    if (!(c.length > 0.0) || c.cells < 4) throw ConfigError("1D grid needs length > 0 and cells >= 4");
  }

  c.policy.cfl_number = in.cfl.value_or(two_d ? 0.5 : 0.7);
  if (!(c.policy.cfl_number > 0.0 && c.policy.cfl_number <= 1.0)) {
    throw ConfigError(fmt::format("cfl must lie in (0, 1], got {}", c.policy.cfl_number));
  }
  c.policy.space_order = in.space_order.value_or(SpaceOrder::Second);
  const TimeOrder default_time =
      two_d && c.regime == Regime::Contracting ? TimeOrder::SspRk3 : TimeOrder::Rk4;
  c.policy.time_order = in.time_order.value_or(default_time);
  c.policy.extra_rule = in.extra_rule.value_or(ExtraRule::None);
  c.boundary = in.boundary.value_or(BoundaryRule::Outflow);

  c.initial_condition = in.initial_condition.value_or(Preset::Zero);
  c.ic_value = in.ic_value.value_or(0.8);
  if (c.initial_condition == Preset::Paper2D && !two_d) {
    throw ConfigError("initial condition paper2d needs dimension 2 (use paper2d_diagonal in 1D)");
  }
  if (c.initial_condition == Preset::Paper2DDiagonal && two_d) {
    throw ConfigError("initial condition paper2d_diagonal is 1D only");
  }
  if (in.ic_table) {
    c.ic_table = *in.ic_table;
    const std::size_t expected =
        two_d ? static_cast<std::size_t>(c.nx) * c.ny : static_cast<std::size_t>(c.cells);
    if (c.ic_table.size() != expected) {
      throw ConfigError(fmt::format("ic_table has {} values, grid needs {}", c.ic_table.size(), expected));
    }
  }

  if (in.checkpoints) c.checkpoints = *in.checkpoints;
  if (in.tau_end) {
    c.tau_end = *in.tau_end;
  } else if (!c.checkpoints.empty()) {
    c.tau_end = c.checkpoints.back();
  } else {
    switch (c.regime) {
      case Regime::Expanding: c.tau_end = c.tau0 + 63.0; break;
      case Regime::Contracting: c.tau_end = -1e-4; break;
      case Regime::Flat: c.tau_end = c.tau0 + 1.0; break;
    }
  }
  if (!in.checkpoints) {
    if (c.regime == Regime::Expanding) {
      for (double t = 2.0 * c.tau0; t < c.tau_end; t *= 2.0) c.checkpoints.push_back(t);
    } else if (c.regime == Regime::Contracting) {
      for (double t : {-0.5, -0.1, -0.01, -1e-3}) {
        if (t > c.tau0 && t < c.tau_end) c.checkpoints.push_back(t);
      }
    }
  }
  if (c.regime == Regime::Contracting && !(c.tau_end < 0.0)) {
    throw ConfigError(fmt::format("contracting runs need tau_end < 0, got {}", c.tau_end));
  }
  if (!(c.tau_end > c.tau0)) {
    throw ConfigError(fmt::format("tau_end ({}) must exceed tau0 ({})", c.tau_end, c.tau0));
  }
  try {
    (void)output_times(c.tau0, c.checkpoints, c.tau_end);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  c.max_steps = in.max_steps.value_or(kDefaultStepBudget);
  if (c.max_steps <= 0) throw ConfigError("max_steps must be positive");
  return c;
}

RunConfig1D make_run_1d(const RunConfig& c) {
  if (c.dimension != 1) throw ConfigError("not a 1D config");
  const Grid1D grid(c.length, c.cells);
  RunConfig1D run{Scheme1D{grid, c.background(), c.y_flux(), c.boundary}, c.policy, {},
                  c.checkpoints, c.tau_end, c.max_steps};
  run.initial = c.ic_table.empty() ? sample_1d(c.initial_condition, grid, c.ic_value) : c.ic_table;
  return run;
}

RunConfig2D make_run_2d(const RunConfig& c) {
  if (c.dimension != 2) throw ConfigError("not a 2D config");
  const Grid2D grid(c.lx, c.ly, c.nx, c.ny);
  RunConfig2D run{Scheme2D{grid, c.background(), FluxModel{ScalarFlux::quadratic(), c.y_flux()},
                           c.boundary},
                  c.policy, {}, c.checkpoints, c.tau_end, c.max_steps};
  run.initial = c.ic_table.empty() ? sample_2d(c.initial_condition, grid, c.ic_value) : c.ic_table;
  return run;
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["dimension"] = c.dimension;
  j["regime"] = to_string(c.regime);
  j["kappa"] = c.kappa;
  j["tau0"] = c.tau0;
  j["flux"] = to_string(c.flux);
  j["beta"] = c.beta;
  if (c.dimension == 1) {
    j["length"] = c.length;
    j["cells"] = c.cells;
  } else {
    j["lx"] = c.lx;
    j["ly"] = c.ly;
    j["nx"] = c.nx;
    j["ny"] = c.ny;
  }
  j["cfl"] = c.policy.cfl_number;
  j["space_order"] = to_string(c.policy.space_order);
  j["time_order"] = to_string(c.policy.time_order);
  j["extra_rule"] = to_string(c.policy.extra_rule);
  j["boundary"] = to_string(c.boundary);
  j["initial_condition"] = c.ic_table.empty() ? std::string(to_string(c.initial_condition)) : "table";
  j["ic_value"] = c.ic_value;
  j["checkpoints"] = c.checkpoints;
  j["tau_end"] = c.tau_end;
  j["max_steps"] = c.max_steps;
  return j;
}

}  // namespace cosmoburgers::app
