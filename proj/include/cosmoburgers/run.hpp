#pragma once

#include <limits>
#include <span>
#include <vector>

#include "cosmoburgers/diagnostics.hpp"

namespace cosmoburgers {

inline constexpr long kDefaultStepBudget = 10'000'000;

/// Step-size bookkeeping of one run.
struct RunStats {
  long steps = 0;
  double dt_min = std::numeric_limits<double>::infinity();
  double dt_max = 0.0;
  double dt_sum = 0.0;

  double dt_mean() const { return steps > 0 ? dt_sum / steps : 0.0; }
  void record(double dt);
};

/// The previous accepted step, for rules that depend on step history.
struct StepHistory {
  double tau = 0.0;  // time at the start of the previous step
  double dt = 0.0;   // step proposed by the policy (before checkpoint landing)
};

/// Recorded state at a checkpoint. `values` uses the grid's storage order.
struct Snapshot {
  double tau = 0.0;
  std::vector<double> values;
  DiagnosticsRecord diagnostics;
};

struct SnapshotSeries {
  std::vector<Snapshot> snapshots;
  RunStats stats;
};

/// Sorted output times: the checkpoints followed by tau_end when it is not
/// already the last checkpoint. Throws DomainError unless every checkpoint
/// lies in (tau0, tau_end] in increasing order.
std::vector<double> output_times(double tau0, std::span<const double> checkpoints,
                                 double tau_end);

}  // namespace cosmoburgers
