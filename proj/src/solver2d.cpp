#include "cosmoburgers/solver2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "cosmoburgers/diagnostics.hpp"
#include "cosmoburgers/errors.hpp"
#include "cosmoburgers/reconstruction.hpp"
#include "cosmoburgers/time_integration.hpp"
#include "run_loop.hpp"

namespace cosmoburgers {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_size(const Grid2D& grid, std::span<const double> v) {
  if (v.size() != grid.size()) {
    throw DomainError(fmt::format("field has {} cells, grid has {}", v.size(), grid.size()));
  }
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

Field2D advance_checked(const Scheme2D& scheme, SpaceOrder space, TimeOrder time,
                        const Field2D& field, double dt, const Executor& ex) {
  check_step(scheme.background, field.tau, dt);
  if (dt == 0.0) return field;
  auto op = [&](std::span<const double> u, double tau) {
    return rhs_2d(scheme, space, u, tau, ex);
  };
  return {advance(time, field.values, field.tau, dt, op, ex), field.tau + dt};
}

}  // namespace

Reconstruction2D reconstruct_2d(const Grid2D& grid, std::span<const double> v,
                                BoundaryRule boundary) {
  require_size(grid, v);
  const int nx = grid.nx(), ny = grid.ny();
  Reconstruction2D r;
  for (auto* a : {&r.jump_x, &r.jump_y, &r.x_minus, &r.x_plus, &r.y_minus, &r.y_plus}) {
    a->resize(grid.size());
  }
  for (int k = 0; k < ny; ++k) {
    const LineReconstruction line = reconstruct_minmod(v.subspan(grid.index(0, k), nx), boundary);
    for (int j = 0; j < nx; ++j) {
      const std::size_t i = grid.index(j, k);
      r.jump_x[i] = line.jumps[j];
      r.x_minus[i] = line.left[j];
      r.x_plus[i] = line.right[j];
    }
  }
  std::vector<double> column(ny);
  for (int j = 0; j < nx; ++j) {
    for (int k = 0; k < ny; ++k) column[k] = v[grid.index(j, k)];
    const LineReconstruction line = reconstruct_minmod(column, boundary);
    for (int k = 0; k < ny; ++k) {
      const std::size_t i = grid.index(j, k);
      r.jump_y[i] = line.jumps[k];
      r.y_minus[i] = line.left[k];
      r.y_plus[i] = line.right[k];
    }
  }
  return r;
}

std::vector<double> rhs_2d(const Scheme2D& scheme, SpaceOrder order,
                           std::span<const double> v, double tau, const Executor& ex) {
  const Grid2D& grid = scheme.grid;
  require_size(grid, v);
  const double m = geometry_coefficient(tau, scheme.background);
  const int nx = grid.nx(), ny = grid.ny();
  std::vector<double> div_x(grid.size()), div_y(grid.size()), out(grid.size());

  ex.for_ranges(static_cast<std::size_t>(ny), [&](std::size_t begin, std::size_t end) {
    LineSweeper sweeper;
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t offset = grid.index(0, static_cast<int>(k));
      sweeper.divergence(v.subspan(offset, nx), grid.dx(), scheme.flux.f, order,
                         scheme.boundary, std::span<double>(div_x).subspan(offset, nx));
    }
  });
  ex.for_ranges(static_cast<std::size_t>(nx), [&](std::size_t begin, std::size_t end) {
    LineSweeper sweeper;
    std::vector<double> column(ny), column_div(ny);
    for (std::size_t j = begin; j < end; ++j) {
      const int jj = static_cast<int>(j);
      for (int k = 0; k < ny; ++k) column[k] = v[grid.index(jj, k)];
      sweeper.divergence(column, grid.dy(), scheme.flux.g, order, scheme.boundary, column_div);
      for (int k = 0; k < ny; ++k) div_y[grid.index(jj, k)] = column_div[k];
    }
  });
  ex.for_ranges(grid.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = (div_x[i] + div_y[i]) + m * source(v[i]);
  });
  return out;
}

Field2D step_euler_2d(const Scheme2D& scheme, SpaceOrder order, const Field2D& field,
                      double dt, const Executor& ex) {
  return advance_checked(scheme, order, TimeOrder::Euler, field, dt, ex);
}

Field2D step_rk4_2d(const Scheme2D& scheme, SpaceOrder order, const Field2D& field,
                    double dt, const Executor& ex) {
  return advance_checked(scheme, order, TimeOrder::Rk4, field, dt, ex);
}

Field2D step_ssprk3_2d(const Scheme2D& scheme, SpaceOrder order, const Field2D& field,
                       double dt, const Executor& ex) {
  return advance_checked(scheme, order, TimeOrder::SspRk3, field, dt, ex);
}

Field2D step_2d(const Scheme2D& scheme, const StepPolicy& policy, const Field2D& field,
                double dt, const Executor& ex) {
  return advance_checked(scheme, policy.space_order, policy.time_order, field, dt, ex);
}

double max_abs_trace(const Grid2D& grid, std::span<const double> v,
                     BoundaryRule boundary, SpaceOrder order) {
  require_size(grid, v);
  if (order == SpaceOrder::First) return max_abs(v);
  const Reconstruction2D r = reconstruct_2d(grid, v, boundary);
  return std::max({max_abs(r.x_minus), max_abs(r.x_plus), max_abs(r.y_minus), max_abs(r.y_plus)});
}

double dt_2d(std::span<const double> v, double tau, const Background& bg,
             const Grid2D& grid, const StepPolicy& policy, BoundaryRule boundary,
             const std::optional<StepHistory>& previous) {
  require_size(grid, v);
  const double h = std::min(grid.dx(), grid.dy());
  if (bg.regime() != Regime::Flat && !grid.is_square_spacing()) {
    throw DomainError("2D time-step rules for curved backgrounds need dx == dy");
  }
  auto cfl_bound = [&] {
    const double speed = max_abs_trace(grid, v, boundary, policy.space_order);
    return speed > 0.0 ? policy.cfl_number * h / speed : kInf;
  };

  switch (bg.regime()) {
    case Regime::Flat:
      return cfl_bound();
    case Regime::Expanding: {
      if (!(tau > 0.0)) throw DomainError("expanding time-step rule needs tau > 0");
      double source_bound = kInf;
      for (double x : v) {
        const double damping = 1.0 - x * x;
        if (damping > 0.0) source_bound = std::min(source_bound, tau / (bg.kappa() * damping));
      }
      return std::min(cfl_bound(), source_bound);
    }
    case Regime::Contracting: {
      if (!(tau < 0.0)) throw DomainError("contracting time-step rule needs tau < 0");
      const double scale = bg.kappa() <= 1.0 ? 0.5 : 0.5 / bg.kappa();
      const double speed = max_abs(v);
      const double transport = speed > 0.0 ? grid.dy() / speed : kInf;
      double dt = scale * std::min(transport, 2.0 * std::abs(tau));
      if (previous && previous->tau < 0.0) {
        dt = std::min(dt, (tau / previous->tau) * previous->dt);
      }
      return dt;
    }
  }
  return cfl_bound();
}

SnapshotSeries run_2d(const RunConfig2D& config, const Executor& ex) {
  const Scheme2D& scheme = config.scheme;
  const Background& bg = scheme.background;
  require_size(scheme.grid, config.initial);
  if (!(config.policy.cfl_number > 0.0 && config.policy.cfl_number <= 1.0)) {
    throw DomainError(fmt::format("cfl number must lie in (0, 1], got {}", config.policy.cfl_number));
  }
  if (bg.regime() == Regime::Contracting && !(config.tau_end < 0.0)) {
    throw DomainError("contracting runs must stop at tau_end < 0");
  }
  const std::vector<double> targets = output_times(bg.tau0(), config.checkpoints, config.tau_end);

  SnapshotSeries series;
  auto dt_rule = [&](std::span<const double> v, double tau,
                     const std::optional<StepHistory>& history) {
    return dt_2d(v, tau, bg, scheme.grid, config.policy, scheme.boundary, history);
  };
  auto stepper = [&](std::span<const double> v, double tau, double dt) {
    check_step(bg, tau, dt);
    auto op = [&](std::span<const double> u, double t) {
      return rhs_2d(scheme, config.policy.space_order, u, t, ex);
    };
    return advance(config.policy.time_order, v, tau, dt, op, ex);
  };
  auto record = [&](std::span<const double> v, double tau) {
    series.snapshots.push_back({tau, {v.begin(), v.end()}, diagnose_2d(v, tau, scheme.grid)});
  };
  series.stats = detail::integrate(config.initial, bg.tau0(), targets, config.max_steps,
                                   dt_rule, stepper, record);
  return series;
}

}  // namespace cosmoburgers
