#include "cosmoburgers/grid.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cosmoburgers/errors.hpp"

namespace cosmoburgers {

std::string_view to_string(BoundaryRule rule) {
  return rule == BoundaryRule::Periodic ? "periodic" : "outflow";
}

Grid1D::Grid1D(double length, int cells) : length_(length), cells_(cells) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw DomainError(fmt::format("grid length must be positive, got {}", length));
  }
  if (cells < 4) throw DomainError(fmt::format("grid needs at least 4 cells, got {}", cells));
}

Grid2D::Grid2D(double lx, double ly, int nx, int ny)
    : lx_(lx), ly_(ly), nx_(nx), ny_(ny) {
  if (!(lx > 0.0 && ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
    throw DomainError(fmt::format("grid lengths must be positive, got {} x {}", lx, ly));
  }
  if (nx < 4 || ny < 4) {
    throw DomainError(fmt::format("grid needs at least 4 cells per direction, got {} x {}", nx, ny));
  }
}

bool Grid2D::is_square_spacing() const {
  return std::abs(dx() - dy()) <= 1e-12 * std::max(dx(), dy());
}

}  // namespace cosmoburgers
