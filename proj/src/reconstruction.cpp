#include "cosmoburgers/reconstruction.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "cosmoburgers/errors.hpp"
#include "cosmoburgers/riemann.hpp"

namespace cosmoburgers {

double limited_jump(double prev, double center, double next) {
  const double eta = (next - center) * (center - prev);
  if (!(eta > 0.0)) return 0.0;
  const double magnitude =
      std::min({2.0 * std::abs(center - prev), 2.0 * std::abs(next - center),
                0.5 * std::abs(next - prev)});
  return std::copysign(magnitude, next - prev);
}

void pad_line(std::span<const double> line, BoundaryRule boundary,
              std::vector<double>& padded) {
  const int n = static_cast<int>(line.size());
  padded.resize(line.size() + 2 * kGhostWidth);
  for (int p = 0; p < n + 2 * kGhostWidth; ++p) {
    int j = p - kGhostWidth;
    if (boundary == BoundaryRule::Periodic) {
      j = ((j % n) + n) % n;
    } else {
      j = std::clamp(j, 0, n - 1);
    }
    padded[p] = line[j];
  }
}

LineReconstruction reconstruct_minmod(std::span<const double> values,
                                      BoundaryRule boundary) {
  if (values.size() < 4) {
    throw DomainError(fmt::format("reconstruction needs at least 4 cells, got {}", values.size()));
  }
  std::vector<double> padded;
  pad_line(values, boundary, padded);
  const std::size_t n = values.size();
  LineReconstruction out;
  out.jumps.resize(n);
  out.left.resize(n);
  out.right.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t p = j + kGhostWidth;
    const double jump = limited_jump(padded[p - 1], padded[p], padded[p + 1]);
    out.jumps[j] = jump;
    out.left[j] = values[j] - 0.5 * jump;
    out.right[j] = values[j] + 0.5 * jump;
  }
  return out;
}

void LineSweeper::divergence(std::span<const double> line, double h,
                             const ScalarFlux& flux, SpaceOrder order,
                             BoundaryRule boundary, std::span<double> out) {
  const int n = static_cast<int>(line.size());
  pad_line(line, boundary, padded_);
  fluxes_.resize(n + 1);

  // Interface i sits between cells i-1 and i, i.e. padded entries i+1 and i+2.
  if (order == SpaceOrder::First) {
    for (int i = 0; i <= n; ++i) {
      fluxes_[i] = godunov(padded_[i + 1], padded_[i + 2], flux);
    }
  } else {
    jumps_.resize(padded_.size());
    for (int p = 1; p <= n + 2; ++p) {
      jumps_[p] = limited_jump(padded_[p - 1], padded_[p], padded_[p + 1]);
    }
    for (int i = 0; i <= n; ++i) {
      const double left = padded_[i + 1] + 0.5 * jumps_[i + 1];
      const double right = padded_[i + 2] - 0.5 * jumps_[i + 2];
      fluxes_[i] = godunov(left, right, flux);
    }
  }
  for (int j = 0; j < n; ++j) out[j] = -(fluxes_[j + 1] - fluxes_[j]) / h;
}

}  // namespace cosmoburgers
