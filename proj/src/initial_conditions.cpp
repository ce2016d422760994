#include "cosmoburgers/initial_conditions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "cosmoburgers/errors.hpp"

namespace cosmoburgers {

namespace {

constexpr std::array<std::pair<Preset, std::string_view>, 7> kNames{{
    {Preset::Step1D, "step1d"},
    {Preset::Sine1DA, "sine1d_a"},
    {Preset::Sine1DB, "sine1d_b"},
    {Preset::Paper2D, "paper2d"},
    {Preset::Paper2DDiagonal, "paper2d_diagonal"},
    {Preset::Constant, "constant"},
    {Preset::Zero, "zero"},
}};

double profile_1d(Preset preset, double y, double constant_value) {
  switch (preset) {
    case Preset::Step1D: return step_profile(y);
    case Preset::Sine1DA: return sine_profile(y, 0.8);
    case Preset::Sine1DB: return sine_profile(y, 0.16);
    case Preset::Paper2DDiagonal: {
      const double x = y / std::numbers::sqrt2;
      return paper2d_profile(x, x);
    }
    case Preset::Constant: return constant_value;
    case Preset::Zero: return 0.0;
    case Preset::Paper2D: break;
  }
  throw DomainError("paper2d is a 2D preset; use paper2d_diagonal in 1D");
}

}  // namespace

std::string_view to_string(Preset preset) {
  for (const auto& [p, name] : kNames) {
    if (p == preset) return name;
  }
  return "unknown";
}

std::optional<Preset> preset_from_string(std::string_view name) {
  for (const auto& [p, n] : kNames) {
    if (n == name) return p;
  }
  return std::nullopt;
}

double step_profile(double y) { return (y >= 0.666 && y < 1.5) ? 0.8 : 0.0; }

double sine_profile(double y, double amplitude) {
  return amplitude * std::sin(5.0 * y) * std::cos((std::numbers::pi * y * y * y - 3.0) / 7.0);
}

double paper2d_profile(double x, double y) {
  const double c = std::numbers::sqrt2 * std::numbers::pi;
  return (std::sin(4 * c * x - 3 * c * y) + std::cos(c * x + 3 * c * y) +
          std::sin(3 * c * x - 5 * c * y) + std::sin(5 * c * x + 3 * c * y) -
          std::cos(2 * c * x + 2 * c * y)) /
         8.0;
}

std::vector<double> sample_1d(Preset preset, const Grid1D& grid, double constant_value) {
  std::vector<double> v(grid.cells());
  for (int j = 0; j < grid.cells(); ++j) v[j] = profile_1d(preset, grid.center(j), constant_value);
  return v;
}

std::vector<double> sample_2d(Preset preset, const Grid2D& grid, double constant_value) {
  if (preset == Preset::Paper2DDiagonal) {
    throw DomainError("paper2d_diagonal is a 1D preset");
  }
  std::vector<double> v(grid.size());
  for (int k = 0; k < grid.ny(); ++k) {
    for (int j = 0; j < grid.nx(); ++j) {
      v[grid.index(j, k)] = preset == Preset::Paper2D
                                ? paper2d_profile(grid.x_center(j), grid.y_center(k))
                                : profile_1d(preset, grid.x_center(j), constant_value);
    }
  }
  return v;
}

}  // namespace cosmoburgers
