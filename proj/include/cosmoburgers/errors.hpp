#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cosmoburgers {

/// Input outside the domain of an operation (bad time, bad state, bad grid).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The geometry coefficient kappa/tau is evaluated at tau = 0.
class SingularTimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A run produced a non-finite value. Carries the last finite state.
class NumericalAbort : public std::runtime_error {
 public:
  NumericalAbort(const std::string& what, std::vector<double> last_values,
                 double last_tau)
      : std::runtime_error(what),
        last_values_(std::move(last_values)),
        last_tau_(last_tau) {}

  const std::vector<double>& last_values() const { return last_values_; }
  double last_tau() const { return last_tau_; }

 private:
  std::vector<double> last_values_;
  double last_tau_;
};

/// The step budget of a run was exhausted before reaching tau_end.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration; the message carries line information when known.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cosmoburgers
