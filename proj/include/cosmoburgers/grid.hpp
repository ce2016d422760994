#pragma once

#include <cstddef>
#include <string_view>

namespace cosmoburgers {

/// Ghost treatment at the domain ends.
enum class BoundaryRule {
  Outflow,   // zero-gradient ghost cells
  Periodic,
};

std::string_view to_string(BoundaryRule rule);

/// Ghost-cell width on each side; enough for the second-order stencil.
inline constexpr int kGhostWidth = 2;

/// Uniform cells on [0, length]; centers at (j + 1/2) dy.
class Grid1D {
 public:
  /// Throws DomainError unless length > 0 and cells >= 4.
  Grid1D(double length, int cells);

  double length() const { return length_; }
  int cells() const { return cells_; }
  double dy() const { return length_ / cells_; }
  double center(int j) const { return (j + 0.5) * dy(); }

 private:
  double length_;
  int cells_;
};

/// Uniform cells on [0, lx] x [0, ly]. Values are stored row by row:
/// index(j, k) = k * nx + j with j along x and k along y.
class Grid2D {
 public:
  /// Throws DomainError unless both lengths > 0 and both counts >= 4.
  Grid2D(double lx, double ly, int nx, int ny);

  double lx() const { return lx_; }
  double ly() const { return ly_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return lx_ / nx_; }
  double dy() const { return ly_ / ny_; }
  std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }
  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(k) * nx_ + j;
  }
  double x_center(int j) const { return (j + 0.5) * dx(); }
  double y_center(int k) const { return (k + 0.5) * dy(); }
  /// True when dx and dy agree to rounding.
  bool is_square_spacing() const;

 private:
  double lx_, ly_;
  int nx_, ny_;
};

}  // namespace cosmoburgers
