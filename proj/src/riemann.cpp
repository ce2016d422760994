#include "cosmoburgers/riemann.hpp"

#include <algorithm>

namespace cosmoburgers {

double godunov_convex(double left, double right, const ScalarFlux& flux) {
  const double f_left = flux.value(left);
  const double f_right = flux.value(right);
  if (left > right) {
    // Both branches agree when f_right == f_left; take the first.
    return (f_right - f_left <= 0.0) ? f_left : f_right;
  }
  if (flux.derivative(left) > 0.0) return f_left;
  if (flux.derivative(right) < 0.0) return f_right;
  return flux.value(0.0);
}

double godunov_general(double left, double right, const ScalarFlux& flux,
                       std::span<const double> critical_points) {
  const double f_left = flux.value(left);
  const double f_right = flux.value(right);
  if (left <= right) {
    double best = std::min(f_left, f_right);
    for (double c : critical_points) {
      if (c > left && c < right) best = std::min(best, flux.value(c));
    }
    return best;
  }
  double best = std::max(f_left, f_right);
  for (double c : critical_points) {
    if (c > right && c < left) best = std::max(best, flux.value(c));
  }
  return best;
}

double godunov(double left, double right, const ScalarFlux& flux) {
  if (flux.is_convex()) return godunov_convex(left, right, flux);
  switch (flux.shape()) {
    case FluxShape::Cubic: {
      static constexpr double kCubicCritical[] = {0.0};
      return godunov_general(left, right, flux, kCubicCritical);
    }
    default: {
      const double critical[] = {-(1.0 - flux.beta()) / flux.beta(), 0.0};
      return godunov_general(left, right, flux, critical);
    }
  }
}

}  // namespace cosmoburgers
