#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cosmoburgers/app/commands.hpp"
#include "cosmoburgers/app/config.hpp"
#include "cosmoburgers/app/output.hpp"
#include "cosmoburgers/errors.hpp"

namespace {

using namespace cosmoburgers;
using namespace cosmoburgers::app;

enum ExitCode { kOk = 0, kFailure = 1, kBadConfig = 2, kNumerical = 3, kBudget = 4 };

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  int threads = 1;
  std::string preset;
  std::string regime;
  std::optional<double> kappa;
  std::string grid;
  std::optional<double> cfl;
  std::optional<double> tau_end;
  std::string space_order;
  std::string time_order;
  std::vector<double> checkpoints;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("-c,--config", o.config_path, "YAML run config")->check(CLI::ExistingFile);
  cmd->add_option("-o,--out", o.out_dir, "output directory (default $COSMOBURGERS_OUT or ./out)");
  cmd->add_option("-t,--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--preset", o.preset, "initial condition preset");
  cmd->add_option("--regime", o.regime, "expanding, contracting or flat");
  cmd->add_option("--kappa", o.kappa, "source strength");
  cmd->add_option("--grid", o.grid, "cells, e.g. 1024 or 200x200");
  cmd->add_option("--cfl", o.cfl, "CFL number");
  cmd->add_option("--tau-end", o.tau_end, "final time");
  cmd->add_option("--space-order", o.space_order, "first or second");
  cmd->add_option("--time-order", o.time_order, "euler, ssprk3 or rk4");
  cmd->add_option("--checkpoints", o.checkpoints, "output times");
}

template <typename T, typename F>
T parse_enum(const std::string& text, const char* what, F from_string) {
  if (auto v = from_string(text)) return *v;
  throw ConfigError(fmt::format("unknown {} '{}'", what, text));
}

RunConfig build_config(const CommonOptions& o) {
  ConfigInput in;
  if (!o.preset.empty()) {
    in = preset_defaults(parse_enum<Preset>(o.preset, "preset", preset_from_string));
  }
  if (!o.config_path.empty()) in = merge(in, load_config(o.config_path));
  if (!o.regime.empty()) in.regime = parse_enum<Regime>(o.regime, "regime", regime_from_string);
  if (o.kappa) in.kappa = o.kappa;
  if (!o.grid.empty()) apply_grid_override(in, o.grid);
  if (o.cfl) in.cfl = o.cfl;
  if (o.tau_end) in.tau_end = o.tau_end;
  if (!o.space_order.empty()) {
    in.space_order = parse_enum<SpaceOrder>(o.space_order, "space order", space_order_from_string);
  }
  if (!o.time_order.empty()) {
    in.time_order = parse_enum<TimeOrder>(o.time_order, "time order", time_order_from_string);
  }
  if (!o.checkpoints.empty()) in.checkpoints = o.checkpoints;
  return resolve(in);
}

std::filesystem::path output_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("COSMOBURGERS_OUT"); env && *env) return env;
  return "out";
}

/// "2S4T" style labels.
StepPolicy parse_scheme(const std::string& label, StepPolicy base) {
  if (label.size() != 4 || label[1] != 'S' || label[3] != 'T') {
    throw ConfigError(fmt::format("bad scheme '{}', expected e.g. 2S4T", label));
  }
  switch (label[0]) {
    case '1': base.space_order = SpaceOrder::First; break;
    case '2': base.space_order = SpaceOrder::Second; break;
    default: throw ConfigError(fmt::format("bad space order in '{}'", label));
  }
  switch (label[2]) {
    case '1': base.time_order = TimeOrder::Euler; break;
    case '3': base.time_order = TimeOrder::SspRk3; break;
    case '4': base.time_order = TimeOrder::Rk4; break;
    default: throw ConfigError(fmt::format("bad time order in '{}'", label));
  }
  return base;
}

int run_main(int argc, char** argv) {
  CLI::App app{"Finite-volume solver for Burgers equations with a time-dependent source"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  CommonOptions run_opts;
  auto* run = app.add_subcommand("run", "run one simulation and write snapshots");
  add_common(run, run_opts);
  bool write_initial = false;
  run->add_flag("--initial", write_initial, "also write the state at tau0 to initial.csv");

  CommonOptions conv_opts;
  std::vector<int> grids;
  std::string reference_scheme;
  auto* conv = app.add_subcommand("converge", "grid convergence against a fine reference");
  add_common(conv, conv_opts);
  conv->add_option("--grids", grids, "increasing cell counts; the last is the reference")
      ->required();
  conv->add_option("--reference-scheme", reference_scheme, "scheme of the reference run, e.g. 2S4T");

  CommonOptions matrix_opts;
  auto* matrix = app.add_subcommand("scheme-matrix", "compare first/second order space and time");
  add_common(matrix, matrix_opts);

  double v0 = 0.5;
  double h_kappa = 2.0;
  std::optional<double> h_tau0;
  std::string h_regime = "expanding";
  std::vector<double> taus;
  std::string h_out;
  auto* hom = app.add_subcommand("homogeneous", "tabulate the exact spatially constant solution");
  hom->add_option("--v0", v0, "initial value, |v0| < 1");
  hom->add_option("--kappa", h_kappa, "source strength");
  hom->add_option("--tau0", h_tau0, "initial time");
  hom->add_option("--regime", h_regime, "expanding, contracting or flat");
  hom->add_option("--taus", taus, "times to tabulate")->required();
  hom->add_option("-o,--out", h_out, "output directory");

  CommonOptions diag_opts;
  auto* diag = app.add_subcommand("compare-diagonal", "compare a 2D run along its diagonal with 1D");
  add_common(diag, diag_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadConfig;
  }

  if (run->parsed()) {
    const auto config = build_config(run_opts);
    const auto dir = output_dir(run_opts.out_dir);
    const auto manifest = cmd_run(config, dir, run_opts.threads, write_initial);
    fmt::print("{} snapshots in {} ({} steps)\n", manifest["outputs"].size(), dir.string(),
               manifest["steps"].get<long>());
  } else if (conv->parsed()) {
    const auto config = build_config(conv_opts);
    std::optional<StepPolicy> reference;
    if (!reference_scheme.empty()) reference = parse_scheme(reference_scheme, config.policy);
    const auto table =
        cmd_converge(config, grids, reference, output_dir(conv_opts.out_dir), conv_opts.threads);
    fmt::print("reference {} {}\n", table.reference_grid, table.reference_scheme);
    for (const auto& r : table.rows) {
      fmt::print("{:>10} tau={:<10g} L1={:.6e} L2={:.6e}\n", r.grid, r.tau, r.l1, r.l2);
    }
  } else if (matrix->parsed()) {
    const auto config = build_config(matrix_opts);
    for (const auto& r :
         cmd_scheme_matrix(config, output_dir(matrix_opts.out_dir), matrix_opts.threads)) {
      fmt::print("{} tau={:<10g} L1={:.6e}\n", r.scheme, r.tau, r.l1);
    }
  } else if (hom->parsed()) {
    const Regime regime = parse_enum<Regime>(h_regime, "regime", regime_from_string);
    const double tau0 = h_tau0.value_or(regime == Regime::Expanding     ? 1.0
                                        : regime == Regime::Contracting ? -1.0
                                                                        : 0.0);
    const Background bg = Background::make(regime, regime == Regime::Flat ? 0.0 : h_kappa, tau0);
    const auto dir = output_dir(h_out);
    cmd_homogeneous(v0, bg, taus, dir);
    std::cout << homogeneous_table(v0, bg, taus);
  } else if (diag->parsed()) {
    const auto config = build_config(diag_opts);
    for (const auto& r :
         cmd_compare_diagonal(config, output_dir(diag_opts.out_dir), diag_opts.threads)) {
      fmt::print("tau={:<10g} L1(v)={:.6e} L1(w)={:.6e}\n", r.tau, r.l1_v, r.l1_w);
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const ConfigError& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return kBadConfig;
  } catch (const BudgetExceeded& e) {
    fmt::print(stderr, "step budget exceeded: {}\n", e.what());
    return kBudget;
  } catch (const NumericalAbort& e) {
    fmt::print(stderr, "numerical abort: {}\n", e.what());
    return kNumerical;
  } catch (const DomainError& e) {
    fmt::print(stderr, "domain error: {}\n", e.what());
    return kNumerical;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kFailure;
  }
}
