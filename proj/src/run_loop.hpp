#pragma once

// Shared time loop of the 1D and 2D drivers.

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include <fmt/format.h>

#include "cosmoburgers/errors.hpp"
#include "cosmoburgers/run.hpp"

namespace cosmoburgers::detail {

/// Advances `values` from tau0 through every output time, landing exactly on
/// each one. dt_rule(values, tau, history) proposes a step (may be +inf when
/// no bound is active), step(values, tau, dt) performs it, and
/// record(values, tau) is called at every output time.
template <class DtRule, class Step, class Record>
RunStats integrate(std::vector<double> values, double tau0,
                   std::span<const double> targets, long max_steps,
                   DtRule&& dt_rule, Step&& step, Record&& record) {
  RunStats stats;
  double tau = tau0;
  std::optional<StepHistory> history;
  for (double target : targets) {
    while (tau < target) {
      if (stats.steps >= max_steps) {
        throw BudgetExceeded(fmt::format(
            "step budget of {} exhausted at tau = {} before reaching {}", max_steps, tau, target));
      }
      const double proposed = dt_rule(std::span<const double>(values), tau, history);
      if (!(proposed > 0.0)) {
        throw NumericalAbort(fmt::format("time-step rule returned {} at tau = {}", proposed, tau),
                             values, tau);
      }
      const double remaining = target - tau;
      const bool lands = proposed >= remaining * (1.0 - 1e-10);
      const double dt = lands ? remaining : proposed;

      std::vector<double> next = step(std::span<const double>(values), tau, dt);
      for (double x : next) {
        if (!std::isfinite(x)) {
          throw NumericalAbort(
              fmt::format("non-finite value after step from tau = {} with dt = {}", tau, dt),
              values, tau);
        }
      }
      values = std::move(next);
      history = StepHistory{tau, proposed};
      tau = lands ? target : tau + dt;
      stats.record(dt);
    }
    record(std::span<const double>(values), tau);
  }
  return stats;
}

}  // namespace cosmoburgers::detail
