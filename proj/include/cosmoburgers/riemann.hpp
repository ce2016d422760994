#pragma once

#include <span>

#include "cosmoburgers/model.hpp"

namespace cosmoburgers {

struct InterfaceStates {
  double left;
  double right;
};

/// Closed-form Godunov flux for a convex flux normalized by F(0) = F'(0) = 0.
///
/// Shock (left > right): F(left) when F(right) <= F(left), else F(right).
/// Rarefaction (left <= right): F(left) if F'(left) > 0, F(right) if
/// F'(right) < 0, otherwise F(0).
double godunov_convex(double left, double right, const ScalarFlux& flux);

/// Godunov flux for an arbitrary smooth scalar flux: the minimum of F over
/// [left, right] when left <= right, the maximum over [right, left] otherwise.
/// The extremum is taken over the endpoints and the supplied critical points
/// that fall inside the interval.
double godunov_general(double left, double right, const ScalarFlux& flux,
                       std::span<const double> critical_points);

/// godunov_convex for convex fluxes, godunov_general otherwise.
double godunov(double left, double right, const ScalarFlux& flux);

}  // namespace cosmoburgers
