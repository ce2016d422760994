#pragma once

#include <span>
#include <vector>

#include "cosmoburgers/executor.hpp"
#include "cosmoburgers/model.hpp"
#include "cosmoburgers/scheme.hpp"

namespace cosmoburgers {

/// Rejects negative or non-finite steps, and contracting steps that would
/// reach tau = 0.
void check_step(const Background& bg, double tau, double dt);

namespace detail {

template <class F>
void parallel_map(const Executor& ex, std::size_t n, F&& f) {
  ex.for_ranges(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) f(i);
  });
}

}  // namespace detail

// The integrators below take rhs(std::span<const double> u, double tau) and
// return the state after one step of size dt starting at tau.

template <class Rhs>
std::vector<double> euler_step(std::span<const double> u, double tau, double dt,
                               Rhs&& rhs, const Executor& ex = serial_executor()) {
  const std::vector<double> k = rhs(u, tau);
  std::vector<double> out(u.size());
  detail::parallel_map(ex, u.size(), [&](std::size_t i) { out[i] = u[i] + dt * k[i]; });
  return out;
}

/// Classical four-stage Runge-Kutta; stages at tau, tau + dt/2, tau + dt/2, tau + dt.
template <class Rhs>
std::vector<double> rk4_step(std::span<const double> u, double tau, double dt,
                             Rhs&& rhs, const Executor& ex = serial_executor()) {
  const std::size_t n = u.size();
  const double half = 0.5 * dt;
  std::vector<double> stage(n);

  const std::vector<double> k1 = rhs(u, tau);
  detail::parallel_map(ex, n, [&](std::size_t i) { stage[i] = u[i] + half * k1[i]; });
  const std::vector<double> k2 = rhs(stage, tau + half);
  detail::parallel_map(ex, n, [&](std::size_t i) { stage[i] = u[i] + half * k2[i]; });
  const std::vector<double> k3 = rhs(stage, tau + half);
  detail::parallel_map(ex, n, [&](std::size_t i) { stage[i] = u[i] + dt * k3[i]; });
  const std::vector<double> k4 = rhs(stage, tau + dt);

  std::vector<double> out(n);
  detail::parallel_map(ex, n, [&](std::size_t i) {
    out[i] = u[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  });
  return out;
}

/// Three-stage SSP Runge-Kutta in Shu-Osher form:
///   u1 = u + dt L(u, tau)
///   u2 = 3/4 u + 1/4 (u1 + dt L(u1, tau + dt))
///   u+ = 1/3 u + 2/3 (u2 + dt L(u2, tau + dt/2))
template <class Rhs>
std::vector<double> ssprk3_step(std::span<const double> u, double tau, double dt,
                                Rhs&& rhs, const Executor& ex = serial_executor()) {
  const std::size_t n = u.size();
  std::vector<double> u1(n), u2(n), out(n);

  const std::vector<double> l0 = rhs(u, tau);
  detail::parallel_map(ex, n, [&](std::size_t i) { u1[i] = u[i] + dt * l0[i]; });
  const std::vector<double> l1 = rhs(u1, tau + dt);
  detail::parallel_map(ex, n, [&](std::size_t i) {
    u2[i] = 0.75 * u[i] + 0.25 * (u1[i] + dt * l1[i]);
  });
  const std::vector<double> l2 = rhs(u2, tau + 0.5 * dt);
  detail::parallel_map(ex, n, [&](std::size_t i) {
    out[i] = (u[i] + 2.0 * (u2[i] + dt * l2[i])) / 3.0;
  });
  return out;
}

template <class Rhs>
std::vector<double> advance(TimeOrder order, std::span<const double> u, double tau,
                            double dt, Rhs&& rhs, const Executor& ex = serial_executor()) {
  switch (order) {
    case TimeOrder::Euler: return euler_step(u, tau, dt, rhs, ex);
    case TimeOrder::SspRk3: return ssprk3_step(u, tau, dt, rhs, ex);
    case TimeOrder::Rk4: break;
  }
  return rk4_step(u, tau, dt, rhs, ex);
}

}  // namespace cosmoburgers
