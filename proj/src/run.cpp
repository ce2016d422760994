#include "cosmoburgers/run.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "cosmoburgers/errors.hpp"

namespace cosmoburgers {

void RunStats::record(double dt) {
  ++steps;
  dt_min = std::min(dt_min, dt);
  dt_max = std::max(dt_max, dt);
  dt_sum += dt;
}

std::vector<double> output_times(double tau0, std::span<const double> checkpoints,
                                 double tau_end) {
  if (!(tau_end > tau0)) {
    throw DomainError(fmt::format("tau_end = {} must exceed tau0 = {}", tau_end, tau0));
  }
  std::vector<double> times;
  double last = tau0;
  for (double c : checkpoints) {
    if (!(c > last) || c > tau_end) {
      throw DomainError(fmt::format(
          "checkpoint {} must increase and lie in ({}, {}]", c, tau0, tau_end));
    }
    times.push_back(c);
    last = c;
  }
  if (times.empty() || times.back() != tau_end) times.push_back(tau_end);
  return times;
}

}  // namespace cosmoburgers
