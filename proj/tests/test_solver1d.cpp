#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "cosmoburgers/diagnostics.hpp"
#include "cosmoburgers/errors.hpp"
#include "cosmoburgers/initial_conditions.hpp"
#include "cosmoburgers/reconstruction.hpp"
#include "cosmoburgers/solver1d.hpp"

using namespace cosmoburgers;

namespace {

constexpr double kPi = std::numbers::pi;

Scheme1D scheme(const Background& bg, int cells, BoundaryRule boundary = BoundaryRule::Outflow,
                double length = kPi) {
  return Scheme1D{Grid1D(length, cells), bg, ScalarFlux::quadratic(), boundary};
}

double periodic_tv(const std::vector<double>& v) {
  return total_variation(v) + std::abs(v.front() - v.back());
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("minmod limiter") {
  CHECK(limited_jump(0.0, 1.0, 4.0) == 2.0);
  CHECK(limited_jump(4.0, 1.0, 0.0) == -2.0);
  CHECK(limited_jump(0.0, 1.0, 0.0) == 0.0);
  CHECK(limited_jump(1.0, 1.0, 3.0) == 0.0);
  // Centered difference cap: min(2*1, 2*1, 2/2) = 1.
  CHECK(limited_jump(0.0, 1.0, 2.0) == 1.0);

  const std::vector<double> v{0.0, 1.0, 4.0, 9.0, 16.0};
  const auto r = reconstruct_minmod(v, BoundaryRule::Outflow);
  CHECK(r.jumps[1] == 2.0);
  CHECK(r.left[1] == 0.0);
  CHECK(r.right[1] == 2.0);
  // Zero-gradient ghosts make the end cells local plateaus.
  CHECK(r.jumps[0] == 0.0);
  CHECK(r.jumps[4] == 0.0);

  const std::vector<double> flat(6, 0.3);
  const auto c = reconstruct_minmod(flat, BoundaryRule::Periodic);
  for (std::size_t j = 0; j < flat.size(); ++j) {
    CHECK(c.jumps[j] == 0.0);
    CHECK(c.left[j] == 0.3);
    CHECK(c.right[j] == 0.3);
  }
  CHECK_THROWS_AS(reconstruct_minmod(std::vector<double>{1, 2, 3}, BoundaryRule::Outflow), DomainError);
}

TEST_CASE("rhs of constant and step data") {
  const auto ex = Background::expanding(2.0);
  const std::vector<double> c(50, 0.8);
  for (auto order : {SpaceOrder::First, SpaceOrder::Second}) {
    for (auto boundary : {BoundaryRule::Periodic, BoundaryRule::Outflow}) {
      const auto out = rhs(scheme(ex, 50, boundary), order, c, 1.0);
      for (double x : out) CHECK(x == doctest::Approx(-0.576).epsilon(1e-14));
      const auto flat = rhs(scheme(Background::flat(), 50, boundary), order, c, 1.0);
      for (double x : flat) CHECK(x == 0.0);
    }
  }

  // 0.8 left of interface 10, 0 to the right. Hand evaluation of the Godunov
  // fluxes: 0.32 on every interface up to and including 10, 0 beyond (the
  // left ghost copies 0.8 under outflow). Only the first downwind cell moves.
  const int n = 20;
  std::vector<double> step(n, 0.0);
  for (int j = 0; j < 10; ++j) step[j] = 0.8;
  const auto s = scheme(Background::flat(), n);
  const double dy = s.grid.dy();
  auto out = rhs(s, SpaceOrder::First, step, 0.0);
  for (int j = 0; j < n; ++j) {
    if (j == 10) CHECK(out[j] == doctest::Approx(0.32 / dy).epsilon(1e-14));
    else CHECK(out[j] == 0.0);
  }
  // Periodic wrap adds the 0 | 0.8 sonic rarefaction at the domain edge,
  // where the Godunov flux is f(0) = 0, so cell 0 loses 0.32/dy.
  const auto sp = scheme(Background::flat(), n, BoundaryRule::Periodic);
  out = rhs(sp, SpaceOrder::First, step, 0.0);
  for (int j = 0; j < n; ++j) {
    if (j == 10) CHECK(out[j] == doctest::Approx(0.32 / dy).epsilon(1e-14));
    else if (j == 0) CHECK(out[j] == doctest::Approx(-0.32 / dy).epsilon(1e-14));
    else CHECK(out[j] == 0.0);
  }
  CHECK_THROWS_AS(rhs(scheme(ex, 50), SpaceOrder::First, c, 0.0), SingularTimeError);
}

TEST_CASE("forward Euler step") {
  const auto ex = Background::expanding(2.0);
  const auto s = scheme(ex, 40, BoundaryRule::Periodic);
  const Field1D c{std::vector<double>(40, 0.8), 1.0};
  const auto next = step_euler(s, SpaceOrder::Second, c, 0.1);
  CHECK(next.tau == doctest::Approx(1.1));
  for (double x : next.values) CHECK(x == doctest::Approx(0.7424).epsilon(1e-14));

  const Field1D sine{sample_1d(Preset::Sine1DA, Grid1D(kPi, 40)), 0.0};
  const auto flat = scheme(Background::flat(), 40);
  const auto same = step_euler(flat, SpaceOrder::Second, sine, 0.0);
  CHECK(same.values == sine.values);

  // Equals field + dt * rhs(field).
  const auto g = rhs(flat, SpaceOrder::Second, sine.values, 0.0);
  const auto moved = step_euler(flat, SpaceOrder::Second, sine, 0.01);
  for (int j = 0; j < 40; ++j) CHECK(moved.values[j] == sine.values[j] + 0.01 * g[j]);

  for (const auto& bg : {ex, Background::contracting(2.0), Background::flat()}) {
    const Field1D zero{std::vector<double>(40, 0.0), bg.tau0()};
    for (auto order : {SpaceOrder::First, SpaceOrder::Second}) {
      for (const auto& out : {step_euler(scheme(bg, 40), order, zero, 0.05),
                              step_rk4(scheme(bg, 40), order, zero, 0.05),
                              step_ssprk3(scheme(bg, 40), order, zero, 0.05)}) {
        for (double x : out.values) CHECK(x == 0.0);
      }
    }
  }

  const auto co = Background::contracting(2.0);
  const Field1D near_zero{std::vector<double>(40, 0.5), -0.01};
  CHECK_THROWS_AS(step_euler(scheme(co, 40), SpaceOrder::First, near_zero, 0.01), DomainError);
  CHECK_THROWS_AS(step_rk4(scheme(co, 40), SpaceOrder::First, near_zero, 0.02), DomainError);
  CHECK_THROWS_AS(step_euler(scheme(ex, 40), SpaceOrder::First, c, -0.1), DomainError);
}

TEST_CASE("RK4 on the homogeneous problem") {
  const auto ex = Background::expanding(2.0);
  const auto s = scheme(ex, 16, BoundaryRule::Periodic);
  Field1D f{std::vector<double>(16, 0.8), 1.0};
  const auto one = step_rk4(s, SpaceOrder::Second, f, 0.5);
  // Scalar RK4 on v' = -(2/tau) v (1 - v^2), one step from tau = 1.
  auto ode = [](double t, double v) { return -(2.0 / t) * v * (1 - v * v); };
  const double k1 = ode(1.0, 0.8), k2 = ode(1.25, 0.8 + 0.25 * k1);
  const double k3 = ode(1.25, 0.8 + 0.25 * k2), k4 = ode(1.5, 0.8 + 0.5 * k3);
  const double scalar = 0.8 + 0.5 / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  const double exact = homogeneous_solution(0.8, 1.0, 1.5, ex);
  for (double x : one.values) {
    CHECK(x == doctest::Approx(scalar).epsilon(1e-14));
    CHECK(std::abs(x - exact) < 1e-3);
  }

  for (int i = 0; i < 100; ++i) f = step_rk4(s, SpaceOrder::Second, f, 0.005);
  const double exact2 = homogeneous_solution(0.8, 1.0, f.tau, ex);
  for (double x : f.values) CHECK(std::abs(x - exact2) < 1e-10);
}

TEST_CASE("RK4 local error is fifth order") {
  // Positive smooth periodic data: first-order upwinding makes the operator smooth.
  const int n = 100;
  const auto s = scheme(Background::flat(), n, BoundaryRule::Periodic);
  Field1D f{std::vector<double>(n), 0.0};
  for (int j = 0; j < n; ++j) f.values[j] = 0.5 + 0.3 * std::sin(2.0 * s.grid.center(j));

  auto defect = [&](double dt) {
    const auto big = step_rk4(s, SpaceOrder::First, f, dt);
    Field1D small = f;
    for (int i = 0; i < 4; ++i) small = step_rk4(s, SpaceOrder::First, small, dt / 4);
    return max_abs_diff(big.values, small.values);
  };
  const double slope = std::log2(defect(0.01) / defect(0.005));
  CHECK(slope >= 4.8);
}

TEST_CASE("SSP-RK3 is third order") {
  const int n = 100;
  const auto s = scheme(Background::flat(), n, BoundaryRule::Periodic);
  Field1D f{std::vector<double>(n), 0.0};
  for (int j = 0; j < n; ++j) f.values[j] = 0.5 + 0.3 * std::sin(2.0 * s.grid.center(j));
  auto defect = [&](double dt) {
    const auto big = step_ssprk3(s, SpaceOrder::First, f, dt);
    Field1D small = f;
    for (int i = 0; i < 4; ++i) small = step_ssprk3(s, SpaceOrder::First, small, dt / 4);
    return max_abs_diff(big.values, small.values);
  };
  CHECK(std::log2(defect(0.01) / defect(0.005)) >= 3.8);
}

TEST_CASE("expanding time step") {
  const auto ex = Background::expanding(2.0);
  const Grid1D grid(kPi, 1000);
  const StepPolicy policy;
  const std::vector<double> v(1000, 0.8);
  CHECK(dt_expanding(v, 1.0, ex, grid, policy) == doctest::Approx(0.002748893571891069).epsilon(1e-12));
  const std::vector<double> zero(1000, 0.0);
  CHECK(dt_expanding(zero, 1.0, ex, grid, policy) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(dt_expanding(zero, 2.0, ex, grid, policy) == doctest::Approx(1.4).epsilon(1e-15));
  // Transport bound unchanged by tau.
  CHECK(dt_expanding(v, 2.0, ex, grid, policy) == dt_expanding(v, 1.0, ex, grid, policy));
  StepPolicy scaled = policy;
  scaled.extra_rule = ExtraRule::KappaScaled;
  CHECK(dt_expanding(zero, 1.0, ex, grid, scaled) == doctest::Approx(0.35).epsilon(1e-15));
  CHECK_THROWS_AS(dt_expanding(v, 1.0, Background::contracting(2.0), grid, policy), DomainError);
}

TEST_CASE("contracting time step") {
  const auto co = Background::contracting(2.0);
  const Grid1D grid(kPi, 1000);
  const StepPolicy policy;
  std::vector<double> v(1000, 0.1);
  v[17] = -0.9;
  CHECK(dt_contracting(v, -0.5, co, grid, policy) == doctest::Approx(0.002443460952792061).epsilon(1e-12));

  const std::vector<double> ones(1000, 0.999999);
  const double dt = dt_contracting(ones, -1e-6, co, grid, policy);
  CHECK(dt == doctest::Approx(3.5e-7).epsilon(1e-12));
  CHECK(-1e-6 + dt < 0.0);

  const auto soft = Background::contracting(0.5);
  const std::vector<double> small(1000, 1e-3);
  CHECK(dt_contracting(small, -0.1, soft, grid, policy) == doctest::Approx(0.07).epsilon(1e-14));
  StepPolicy scaled = policy;
  scaled.extra_rule = ExtraRule::KappaScaled;
  CHECK(dt_contracting(v, -0.5, co, grid, scaled) == dt_contracting(v, -0.5, co, grid, policy));
}

TEST_CASE("flat periodic runs conserve mass and are TVD") {
  const int n = 400;
  const auto s = scheme(Background::flat(), n, BoundaryRule::Periodic);
  const auto v0 = sample_1d(Preset::Sine1DA, s.grid);
  const double mass0 = std::accumulate(v0.begin(), v0.end(), 0.0) * s.grid.dy();
  const double lo = *std::min_element(v0.begin(), v0.end());
  const double hi = *std::max_element(v0.begin(), v0.end());

  StepPolicy first{0.7, SpaceOrder::First, TimeOrder::Euler, ExtraRule::None};
  Field1D f{v0, 0.0};
  double tv = periodic_tv(f.values);
  bool tvd = true, bounded = true;
  for (int i = 0; i < 500; ++i) {
    f = step(s, first, f, dt_flat(f.values, s.grid, first));
    const double next_tv = periodic_tv(f.values);
    tvd = tvd && next_tv <= tv * (1 + 1e-14);
    tv = next_tv;
    for (double x : f.values) bounded = bounded && x >= lo && x <= hi;
  }
  CHECK(tvd);
  CHECK(bounded);
  const double mass = std::accumulate(f.values.begin(), f.values.end(), 0.0) * s.grid.dy();
  CHECK(std::abs(mass - mass0) <= 1e-13 * std::abs(mass0) + 1e-16);

  StepPolicy second;
  Field1D g{v0, 0.0};
  for (int i = 0; i < 200; ++i) g = step(s, second, g, dt_flat(g.values, s.grid, second));
  const double mass2 = std::accumulate(g.values.begin(), g.values.end(), 0.0) * s.grid.dy();
  CHECK(std::abs(mass2 - mass0) <= 1e-13 * std::abs(mass0) + 1e-16);
}

TEST_CASE("constant data stays constant") {
  for (const auto& bg : {Background::expanding(2.0), Background::contracting(2.0), Background::flat()}) {
    for (auto boundary : {BoundaryRule::Outflow, BoundaryRule::Periodic}) {
      const auto s = scheme(bg, 32, boundary);
      for (auto time : {TimeOrder::Euler, TimeOrder::SspRk3, TimeOrder::Rk4}) {
        const StepPolicy policy{0.7, SpaceOrder::Second, time, ExtraRule::None};
        Field1D f{std::vector<double>(32, -0.4), bg.tau0()};
        for (int i = 0; i < 10; ++i) {
          f = step(s, policy, f, stable_dt(f.values, f.tau, bg, s.grid, policy));
        }
        for (double x : f.values) CHECK(x == f.values.front());
      }
    }
  }
}

TEST_CASE("run_1d against the homogeneous solution") {
  const auto ex = Background::expanding(2.0);
  const StepPolicy fine{0.1, SpaceOrder::Second, TimeOrder::Rk4, ExtraRule::None};
  RunConfig1D cfg{scheme(ex, 100), fine, std::vector<double>(100, 0.8), {2.0, 5.0}, 5.0};
  const auto series = run_1d(cfg);
  REQUIRE(series.snapshots.size() == 2);
  CHECK(series.snapshots[0].tau == 2.0);
  CHECK(series.snapshots[1].tau == 5.0);
  for (const auto& snap : series.snapshots) {
    const double exact = homogeneous_solution(0.8, 1.0, snap.tau, ex);
    for (double x : snap.values) CHECK(std::abs(x - exact) < 1e-8);
  }
  CHECK(series.stats.steps > 0);
}

TEST_CASE("run_1d with zero data") {
  for (const auto& bg : {Background::expanding(1.0), Background::contracting(2.0), Background::flat(0.0)}) {
    const double end = bg.regime() == Regime::Contracting ? -1e-4 : bg.tau0() + 3.0;
    RunConfig1D cfg{scheme(bg, 20), StepPolicy{}, std::vector<double>(20, 0.0), {}, end};
    const auto series = run_1d(cfg);
    REQUIRE(series.snapshots.size() == 1);
    CHECK(series.snapshots[0].tau == end);
    for (double x : series.snapshots[0].values) CHECK(x == 0.0);
  }
}

TEST_CASE("run_1d errors") {
  const auto ex = Background::expanding(2.0);
  RunConfig1D cfg{scheme(ex, 50), StepPolicy{}, sample_1d(Preset::Sine1DA, Grid1D(kPi, 50)), {}, 100.0};
  cfg.max_steps = 3;
  CHECK_THROWS_AS(run_1d(cfg), BudgetExceeded);

  RunConfig1D blow{scheme(Background::flat(), 50), StepPolicy{}, std::vector<double>(50, 0.0), {}, 1.0};
  blow.initial[10] = 1e200;
  try {
    run_1d(blow);
    FAIL("expected NumericalAbort");
  } catch (const NumericalAbort& e) {
    CHECK(e.last_tau() == 0.0);
    CHECK(e.last_values() == blow.initial);
  }

  RunConfig1D bad{scheme(Background::contracting(2.0), 50), StepPolicy{}, std::vector<double>(50, 0.1), {}, 1.0};
  CHECK_THROWS_AS(run_1d(bad), DomainError);
  RunConfig1D order{scheme(ex, 50), StepPolicy{}, std::vector<double>(50, 0.1), {3.0, 2.0}, 5.0};
  CHECK_THROWS_AS(run_1d(order), DomainError);
}

TEST_CASE("contracting run approaches but never reaches zero") {
  const auto co = Background::contracting(2.0);
  RunConfig1D cfg{scheme(co, 400), StepPolicy{}, std::vector<double>(400, 0.8), {-0.5, -0.01}, -1e-4};
  const auto series = run_1d(cfg);
  REQUIRE(series.snapshots.size() == 3);
  for (const auto& snap : series.snapshots) {
    const double exact = homogeneous_solution(0.8, -1.0, snap.tau, co);
    for (double x : snap.values) CHECK(std::abs(x - exact) < 1e-6);
  }
  CHECK(series.snapshots.back().tau == -1e-4);
}
