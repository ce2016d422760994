#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cosmoburgers/executor.hpp"
#include "cosmoburgers/grid.hpp"
#include "cosmoburgers/model.hpp"
#include "cosmoburgers/run.hpp"
#include "cosmoburgers/scheme.hpp"

namespace cosmoburgers {

/// Cell averages on a Grid2D (row-major, see Grid2D::index) at time tau.
struct Field2D {
  std::vector<double> values;
  double tau = 0.0;
};

struct Scheme2D {
  Grid2D grid;
  Background background;
  FluxModel flux;
  BoundaryRule boundary = BoundaryRule::Outflow;
};

/// Directional limited jumps and the four face traces owned by each cell:
///   x_minus = v - jump_x/2 (at x_{j-1/2}),  x_plus = v + jump_x/2 (at x_{j+1/2}),
///   y_minus = v - jump_y/2 (at y_{k-1/2}),  y_plus = v + jump_y/2 (at y_{k+1/2}).
struct Reconstruction2D {
  std::vector<double> jump_x, jump_y;
  std::vector<double> x_minus, x_plus, y_minus, y_plus;
};

Reconstruction2D reconstruct_2d(const Grid2D& grid, std::span<const double> v,
                                BoundaryRule boundary);

/// -(H_{j+1/2,k} - H_{j-1/2,k})/dx - (H_{j,k+1/2} - H_{j,k-1/2})/dy + m(tau) h(v).
/// x-fluxes use f, y-fluxes use g; the work is split over rows and columns.
std::vector<double> rhs_2d(const Scheme2D& scheme, SpaceOrder order,
                           std::span<const double> v, double tau,
                           const Executor& ex = serial_executor());

Field2D step_euler_2d(const Scheme2D& scheme, SpaceOrder order, const Field2D& field,
                      double dt, const Executor& ex = serial_executor());
Field2D step_rk4_2d(const Scheme2D& scheme, SpaceOrder order, const Field2D& field,
                    double dt, const Executor& ex = serial_executor());
Field2D step_ssprk3_2d(const Scheme2D& scheme, SpaceOrder order, const Field2D& field,
                       double dt, const Executor& ex = serial_executor());
Field2D step_2d(const Scheme2D& scheme, const StepPolicy& policy, const Field2D& field,
                double dt, const Executor& ex = serial_executor());

/// Largest |trace| that enters the interface fluxes (cell values at first order).
double max_abs_trace(const Grid2D& grid, std::span<const double> v,
                     BoundaryRule boundary, SpaceOrder order);

/// Time step for the 2D scheme, with the cfl number as the CFL limit:
///   flat:        cfl dx / max|trace|
///   expanding:   min(cfl dx / max|trace|, (1/kappa) min tau / (1 - v^2))
///   contracting: c min(dy / max|v|, 2|tau|), c = 1/2 (kappa <= 1) or
///                1/(2 kappa), capped by (tau/tau_prev) dt_prev when a
///                previous step is known.
/// The curved regimes require dx == dy.
double dt_2d(std::span<const double> v, double tau, const Background& bg,
             const Grid2D& grid, const StepPolicy& policy, BoundaryRule boundary,
             const std::optional<StepHistory>& previous = std::nullopt);

struct RunConfig2D {
  Scheme2D scheme;
  StepPolicy policy{0.5, SpaceOrder::Second, TimeOrder::Rk4, ExtraRule::None};
  std::vector<double> initial;
  std::vector<double> checkpoints;
  double tau_end = 0.0;
  long max_steps = kDefaultStepBudget;
};

/// 2D counterpart of run_1d.
SnapshotSeries run_2d(const RunConfig2D& config, const Executor& ex = serial_executor());

}  // namespace cosmoburgers
