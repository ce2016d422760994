#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "cosmoburgers/app/config.hpp"
#include "cosmoburgers/run.hpp"

namespace cosmoburgers::app {

/// Version string baked in at build time (git describe when available).
std::string version();

/// Snapshot as CSV. '#' header lines carry tau, kappa, regime, grid and
/// scheme; then columns y,v,w (1D) or x,y,v,w (2D), 17 significant digits.
/// Cells without a rescaled value are written as "nan".
std::string snapshot_csv(const RunConfig& config, double tau, std::span<const double> values);

void write_text(const std::filesystem::path& path, const std::string& text);

/// Settings that shape the numerics without being part of the run config.
nlohmann::json design_toggles(const RunConfig& config);

/// The manifest body shared by every run, minus wall time.
nlohmann::json run_manifest(const RunConfig& config, const RunStats& stats,
                            const nlohmann::json& outputs);

/// Formats a double with 17 significant digits.
std::string format_number(double x);

}  // namespace cosmoburgers::app
