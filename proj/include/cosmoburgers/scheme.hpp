#pragma once

#include <string_view>

namespace cosmoburgers {

enum class SpaceOrder { First, Second };
enum class TimeOrder { Euler, SspRk3, Rk4 };

/// Optional regime-specific refinement of the time-step rule.
///   expanding:   source bound tau / (kappa (1 - v^2)) instead of 2 tau / (...)
///   contracting: |tau| / kappa when kappa > 1
enum class ExtraRule { None, KappaScaled };

std::string_view to_string(SpaceOrder order);
std::string_view to_string(TimeOrder order);
std::string_view to_string(ExtraRule rule);

/// Short label such as "2S4T" (second order in space, RK4 in time).
std::string_view scheme_label(SpaceOrder space, TimeOrder time);

struct StepPolicy {
  double cfl_number = 0.7;
  SpaceOrder space_order = SpaceOrder::Second;
  TimeOrder time_order = TimeOrder::Rk4;
  ExtraRule extra_rule = ExtraRule::None;
};

}  // namespace cosmoburgers
