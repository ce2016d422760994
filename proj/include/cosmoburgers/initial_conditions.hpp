#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cosmoburgers/grid.hpp"

namespace cosmoburgers {

/// Named initial data. All presets are sampled at cell centers.
enum class Preset {
  Step1D,           // 0.8 on [0.666, 1.5), 0 elsewhere
  Sine1DA,          // 0.8 sin(5y) cos((pi y^3 - 3)/7)
  Sine1DB,          // 0.16 sin(5y) cos((pi y^3 - 3)/7)
  Paper2D,          // five-mode trigonometric field on [0, pi/sqrt2]^2
  Paper2DDiagonal,  // Paper2D along x = y, parametrized by arclength
  Constant,         // uniform value
  Zero,
};

std::string_view to_string(Preset preset);
std::optional<Preset> preset_from_string(std::string_view name);

double step_profile(double y);
double sine_profile(double y, double amplitude);
double paper2d_profile(double x, double y);

/// Throws DomainError for Paper2D, which has no 1D restriction by that name.
std::vector<double> sample_1d(Preset preset, const Grid1D& grid, double constant_value = 0.8);
/// 1D presets are extended constantly in y. Throws DomainError for Paper2DDiagonal.
std::vector<double> sample_2d(Preset preset, const Grid2D& grid, double constant_value = 0.8);

}  // namespace cosmoburgers
