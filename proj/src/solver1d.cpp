#include "cosmoburgers/solver1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "cosmoburgers/errors.hpp"
#include "cosmoburgers/time_integration.hpp"
#include "run_loop.hpp"

namespace cosmoburgers {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double transport_bound(std::span<const double> v, double h) {
  const double speed = max_abs(v);
  return speed > 0.0 ? h / speed : kInf;
}

auto rhs_functor(const Scheme1D& scheme, SpaceOrder order) {
  return [&scheme, order](std::span<const double> u, double tau) {
    return rhs(scheme, order, u, tau);
  };
}

Field1D advance_checked(const Scheme1D& scheme, SpaceOrder space, TimeOrder time,
                        const Field1D& field, double dt) {
  check_step(scheme.background, field.tau, dt);
  if (dt == 0.0) return field;
  return {advance(time, field.values, field.tau, dt, rhs_functor(scheme, space)),
          field.tau + dt};
}

}  // namespace

void check_step(const Background& bg, double tau, double dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw DomainError(fmt::format("time step must be finite and non-negative, got {}", dt));
  }
  if (bg.regime() == Regime::Contracting && !(tau + dt < 0.0)) {
    throw DomainError(fmt::format("contracting step from tau = {} with dt = {} reaches tau = 0", tau, dt));
  }
}

std::vector<double> rhs(const Scheme1D& scheme, SpaceOrder order,
                        std::span<const double> v, double tau) {
  const auto n = static_cast<std::size_t>(scheme.grid.cells());
  if (v.size() != n) {
    throw DomainError(fmt::format("field has {} cells, grid has {}", v.size(), n));
  }
  const double m = geometry_coefficient(tau, scheme.background);
  std::vector<double> out(n);
  LineSweeper sweeper;
  sweeper.divergence(v, scheme.grid.dy(), scheme.flux, order, scheme.boundary, out);
  for (std::size_t j = 0; j < n; ++j) out[j] = out[j] + m * source(v[j]);
  return out;
}

Field1D step_euler(const Scheme1D& scheme, SpaceOrder order, const Field1D& field, double dt) {
  return advance_checked(scheme, order, TimeOrder::Euler, field, dt);
}

Field1D step_rk4(const Scheme1D& scheme, SpaceOrder order, const Field1D& field, double dt) {
  return advance_checked(scheme, order, TimeOrder::Rk4, field, dt);
}

Field1D step_ssprk3(const Scheme1D& scheme, SpaceOrder order, const Field1D& field, double dt) {
  return advance_checked(scheme, order, TimeOrder::SspRk3, field, dt);
}

Field1D step(const Scheme1D& scheme, const StepPolicy& policy, const Field1D& field, double dt) {
  return advance_checked(scheme, policy.space_order, policy.time_order, field, dt);
}

double dt_expanding(std::span<const double> v, double tau, const Background& bg,
                    const Grid1D& grid, const StepPolicy& policy) {
  if (bg.regime() != Regime::Expanding || !(tau > 0.0)) {
    throw DomainError("expanding time-step rule needs an expanding background and tau > 0");
  }
  const double numerator = policy.extra_rule == ExtraRule::KappaScaled ? tau : 2.0 * tau;
  double source_bound = kInf;
  for (double x : v) {
    const double damping = 1.0 - x * x;
    if (damping > 0.0) source_bound = std::min(source_bound, numerator / (bg.kappa() * damping));
  }
  return policy.cfl_number * std::min(transport_bound(v, grid.dy()), source_bound);
}

double dt_contracting(std::span<const double> v, double tau, const Background& bg,
                      const Grid1D& grid, const StepPolicy& policy) {
  if (bg.regime() != Regime::Contracting || !(tau < 0.0)) {
    throw DomainError("contracting time-step rule needs a contracting background and tau < 0");
  }
  // KappaScaled: |tau|/kappa for kappa > 1, which coincides with min(1, 1/kappa)|tau|.
  const double scale = (policy.extra_rule == ExtraRule::KappaScaled && bg.kappa() > 1.0)
                           ? 1.0 / bg.kappa()
                           : std::min(1.0, 1.0 / bg.kappa());
  return policy.cfl_number * std::min(transport_bound(v, grid.dy()), scale * std::abs(tau));
}

double dt_flat(std::span<const double> v, const Grid1D& grid, const StepPolicy& policy) {
  return policy.cfl_number * transport_bound(v, grid.dy());
}

double stable_dt(std::span<const double> v, double tau, const Background& bg,
                 const Grid1D& grid, const StepPolicy& policy) {
  switch (bg.regime()) {
    case Regime::Expanding: return dt_expanding(v, tau, bg, grid, policy);
    case Regime::Contracting: return dt_contracting(v, tau, bg, grid, policy);
    case Regime::Flat: break;
  }
  return dt_flat(v, grid, policy);
}

SnapshotSeries run_1d(const RunConfig1D& config) {
  const Scheme1D& scheme = config.scheme;
  const Background& bg = scheme.background;
  if (config.initial.size() != static_cast<std::size_t>(scheme.grid.cells())) {
    throw DomainError(fmt::format("initial data has {} cells, grid has {}",
                                  config.initial.size(), scheme.grid.cells()));
  }
  if (!(config.policy.cfl_number > 0.0 && config.policy.cfl_number <= 1.0)) {
    throw DomainError(fmt::format("cfl number must lie in (0, 1], got {}", config.policy.cfl_number));
  }
  if (bg.regime() == Regime::Contracting && !(config.tau_end < 0.0)) {
    throw DomainError("contracting runs must stop at tau_end < 0");
  }
  const std::vector<double> targets = output_times(bg.tau0(), config.checkpoints, config.tau_end);

  SnapshotSeries series;
  auto dt_rule = [&](std::span<const double> v, double tau, const auto&) {
    return stable_dt(v, tau, bg, scheme.grid, config.policy);
  };
  auto stepper = [&](std::span<const double> v, double tau, double dt) {
    check_step(bg, tau, dt);
    return advance(config.policy.time_order, v, tau, dt,
                   rhs_functor(scheme, config.policy.space_order));
  };
  auto record = [&](std::span<const double> v, double tau) {
    series.snapshots.push_back({tau, {v.begin(), v.end()}, diagnose_1d(v, tau, scheme.grid)});
  };
  series.stats = detail::integrate(config.initial, bg.tau0(), targets, config.max_steps,
                                   dt_rule, stepper, record);
  return series;
}

}  // namespace cosmoburgers
