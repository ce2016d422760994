#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace cosmoburgers {

enum class Regime { Expanding, Contracting, Flat };

std::string_view to_string(Regime regime);

/// Background geometry a(t) = |t|^alpha written in the rescaled time tau,
/// where the balance law reads v_tau + f(v)_x + g(v)_y = (kappa/tau) h(v).
///
/// The light-speed parameter is normalized to 1, so admissible states satisfy
/// |v| < 1. The flat regime (a = 1) has no geometric source and is used for
/// standard Burgers comparison runs.
class Background {
 public:
  /// Throws DomainError unless kappa > 0 and tau0 > 0.
  static Background expanding(double kappa, double tau0 = 1.0);
  /// Throws DomainError unless kappa > 0 and tau0 < 0.
  static Background contracting(double kappa, double tau0 = -1.0);
  static Background flat(double tau0 = 0.0);
  /// Dispatches to the named constructors above.
  static Background make(Regime regime, double kappa, double tau0);

  Regime regime() const { return regime_; }
  double kappa() const { return kappa_; }
  /// alpha = kappa / (1 + kappa), the exponent of the scale factor.
  double alpha() const { return kappa_ / (1.0 + kappa_); }
  double tau0() const { return tau0_; }

 private:
  Background(Regime regime, double kappa, double tau0)
      : regime_(regime), kappa_(kappa), tau0_(tau0) {}

  Regime regime_;
  double kappa_;
  double tau0_;
};

/// a(t) = |t|^alpha. Expanding needs t >= 1, contracting -1 <= t < 0.
double scale_factor(double t, const Background& bg);

/// Rescaled time tau(t) with a(t) dtau = dt. The flat regime uses the identity.
double tau_of_t(double t, const Background& bg);
double t_of_tau(double tau, const Background& bg);

/// m(tau) = kappa / tau; zero in the flat regime.
/// Throws SingularTimeError at tau = 0 for curved backgrounds.
double geometry_coefficient(double tau, const Background& bg);

enum class FluxShape { Quadratic, Cubic, Mixed };

std::string_view to_string(FluxShape shape);

/// One scalar flux component, normalized so that F(0) = F'(0) = 0.
///   Quadratic: v^2/2
///   Cubic:     v^3/2
///   Mixed:     (1-beta) v^2/2 + beta v^3/3, beta in (0,1)
class ScalarFlux {
 public:
  static constexpr double kDefaultBeta = 0.5;

  static ScalarFlux quadratic() { return ScalarFlux(FluxShape::Quadratic, 0.0); }
  static ScalarFlux cubic() { return ScalarFlux(FluxShape::Cubic, 0.0); }
  /// Throws DomainError unless 0 < beta < 1.
  static ScalarFlux mixed(double beta = kDefaultBeta);

  FluxShape shape() const { return shape_; }
  double beta() const { return beta_; }

  double value(double v) const;
  double derivative(double v) const;
  /// Roots of derivative(), in increasing order.
  std::vector<double> critical_points() const;
  bool is_convex() const { return shape_ == FluxShape::Quadratic; }

 private:
  ScalarFlux(FluxShape shape, double beta) : shape_(shape), beta_(beta) {}

  FluxShape shape_;
  double beta_;
};

/// The flux pair (f, g). f is always quadratic; g selects the y-flux variant.
struct FluxModel {
  ScalarFlux f = ScalarFlux::quadratic();
  ScalarFlux g = ScalarFlux::quadratic();
};

/// (f(v), g(v)).
std::pair<double, double> flux_eval(const FluxModel& model, double v);
/// (f'(v), g'(v)).
std::pair<double, double> flux_prime(const FluxModel& model, double v);

/// h(v) = -v (1 - v^2).
inline double source(double v) { return -v * (1.0 - v * v); }

/// Exact spatially homogeneous solution of v' = m(tau) h(v) with v(tau0) = v0:
///   v = v0 / sqrt(v0^2 + (1 - v0^2) (tau/tau0)^(2 kappa)).
/// tau and tau0 must lie on the same side of zero as the regime requires.
/// Throws DomainError if |v0| >= 1.
double homogeneous_solution(double v0, double tau0, double tau,
                            const Background& bg);

}  // namespace cosmoburgers
