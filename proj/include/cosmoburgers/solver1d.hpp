#pragma once

#include <span>
#include <vector>

#include "cosmoburgers/grid.hpp"
#include "cosmoburgers/model.hpp"
#include "cosmoburgers/reconstruction.hpp"
#include "cosmoburgers/run.hpp"
#include "cosmoburgers/scheme.hpp"

namespace cosmoburgers {

/// Cell averages on a Grid1D at time tau.
struct Field1D {
  std::vector<double> values;
  double tau = 0.0;
};

/// Everything the semi-discrete operator needs besides the state.
struct Scheme1D {
  Grid1D grid;
  Background background;
  ScalarFlux flux = ScalarFlux::quadratic();
  BoundaryRule boundary = BoundaryRule::Outflow;
};

/// G(v, tau)_j = -(F_{j+1/2} - F_{j-1/2}) / dy + m(tau) h(v_j).
/// First order uses neighbour averages at each interface, second order the
/// limited traces (v_{j,R}, v_{j+1,L}).
std::vector<double> rhs(const Scheme1D& scheme, SpaceOrder order,
                        std::span<const double> v, double tau);

Field1D step_euler(const Scheme1D& scheme, SpaceOrder order, const Field1D& field, double dt);
Field1D step_rk4(const Scheme1D& scheme, SpaceOrder order, const Field1D& field, double dt);
Field1D step_ssprk3(const Scheme1D& scheme, SpaceOrder order, const Field1D& field, double dt);
Field1D step(const Scheme1D& scheme, const StepPolicy& policy, const Field1D& field, double dt);

/// cfl * min(dy / max|v|, min_j 2 tau / (kappa (1 - v_j^2))). The transport
/// term is dropped for a zero field; cells with |v| >= 1 impose no source bound.
double dt_expanding(std::span<const double> v, double tau, const Background& bg,
                    const Grid1D& grid, const StepPolicy& policy);
/// cfl * min(dy / max|v|, min(1, 1/kappa) |tau|).
double dt_contracting(std::span<const double> v, double tau, const Background& bg,
                      const Grid1D& grid, const StepPolicy& policy);
/// cfl * dy / max|v|; +inf for a zero field.
double dt_flat(std::span<const double> v, const Grid1D& grid, const StepPolicy& policy);
/// Regime dispatch of the three rules above.
double stable_dt(std::span<const double> v, double tau, const Background& bg,
                 const Grid1D& grid, const StepPolicy& policy);

struct RunConfig1D {
  Scheme1D scheme;
  StepPolicy policy;
  std::vector<double> initial;        // cell averages at scheme.background.tau0()
  std::vector<double> checkpoints;    // increasing, in (tau0, tau_end]
  double tau_end = 0.0;
  long max_steps = kDefaultStepBudget;
};

/// Integrates from tau0 to tau_end, shortening the step before each output
/// time to land on it exactly. Snapshots are taken at every checkpoint and
/// at tau_end.
/// Throws NumericalAbort on non-finite values and BudgetExceeded when
/// max_steps is reached.
SnapshotSeries run_1d(const RunConfig1D& config);

}  // namespace cosmoburgers
