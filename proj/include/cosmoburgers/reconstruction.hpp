#pragma once

#include <span>
#include <vector>

#include "cosmoburgers/grid.hpp"
#include "cosmoburgers/model.hpp"
#include "cosmoburgers/scheme.hpp"

namespace cosmoburgers {

/// Limited slope times cell width for a cell with neighbours (prev, center, next):
///   sgn(next - prev) min(2|center - prev|, 2|next - center|, |next - prev|/2)
/// when (next - center)(center - prev) > 0, and 0 otherwise.
double limited_jump(double prev, double center, double next);

/// Per-cell limited jumps (slope * dy) and interface traces of one grid line.
struct LineReconstruction {
  std::vector<double> jumps;
  std::vector<double> left;   // v_j - jump_j / 2
  std::vector<double> right;  // v_j + jump_j / 2
};

/// Throws DomainError for lines shorter than 4 cells.
LineReconstruction reconstruct_minmod(std::span<const double> values,
                                      BoundaryRule boundary);

/// Computes -(F_{j+1/2} - F_{j-1/2}) / h along one grid line with Godunov
/// interface fluxes. Keeps its scratch buffers between calls, so one sweeper
/// per thread.
class LineSweeper {
 public:
  void divergence(std::span<const double> line, double h, const ScalarFlux& flux,
                  SpaceOrder order, BoundaryRule boundary, std::span<double> out);

 private:
  std::vector<double> padded_;
  std::vector<double> jumps_;
  std::vector<double> fluxes_;
};

/// Fills `padded` (size n + 2*kGhostWidth) with the line and its ghost cells.
void pad_line(std::span<const double> line, BoundaryRule boundary,
              std::vector<double>& padded);

}  // namespace cosmoburgers
