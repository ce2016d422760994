#include "cosmoburgers/scheme.hpp"

namespace cosmoburgers {

std::string_view to_string(SpaceOrder order) {
  return order == SpaceOrder::First ? "first" : "second";
}

std::string_view to_string(TimeOrder order) {
  switch (order) {
    case TimeOrder::Euler: return "euler";
    case TimeOrder::SspRk3: return "ssprk3";
    case TimeOrder::Rk4: return "rk4";
  }
  return "unknown";
}

std::string_view to_string(ExtraRule rule) {
  return rule == ExtraRule::KappaScaled ? "kappa_scaled" : "none";
}

std::string_view scheme_label(SpaceOrder space, TimeOrder time) {
  const bool second = space == SpaceOrder::Second;
  switch (time) {
    case TimeOrder::Euler: return second ? "2S1T" : "1S1T";
    case TimeOrder::SspRk3: return second ? "2S3T" : "1S3T";
    case TimeOrder::Rk4: return second ? "2S4T" : "1S4T";
  }
  return "?";
}

}  // namespace cosmoburgers
