#include "cosmoburgers/model.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cosmoburgers/errors.hpp"

namespace cosmoburgers {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Expanding: return "expanding";
    case Regime::Contracting: return "contracting";
    case Regime::Flat: return "flat";
  }
  return "unknown";
}

std::string_view to_string(FluxShape shape) {
  switch (shape) {
    case FluxShape::Quadratic: return "quadratic";
    case FluxShape::Cubic: return "cubic";
    case FluxShape::Mixed: return "mixed";
  }
  return "unknown";
}

Background Background::expanding(double kappa, double tau0) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError(fmt::format("kappa must be positive, got {}", kappa));
  }
  if (!(tau0 > 0.0) || !std::isfinite(tau0)) {
    throw DomainError(
        fmt::format("expanding background needs tau0 > 0, got {}", tau0));
  }
  return Background(Regime::Expanding, kappa, tau0);
}

Background Background::contracting(double kappa, double tau0) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError(fmt::format("kappa must be positive, got {}", kappa));
  }
  if (!(tau0 < 0.0) || !std::isfinite(tau0)) {
    throw DomainError(
        fmt::format("contracting background needs tau0 < 0, got {}", tau0));
  }
  return Background(Regime::Contracting, kappa, tau0);
}

Background Background::flat(double tau0) {
  if (!std::isfinite(tau0)) throw DomainError("tau0 must be finite");
  return Background(Regime::Flat, 0.0, tau0);
}

Background Background::make(Regime regime, double kappa, double tau0) {
  switch (regime) {
    case Regime::Expanding: return expanding(kappa, tau0);
    case Regime::Contracting: return contracting(kappa, tau0);
    case Regime::Flat: return flat(tau0);
  }
  throw DomainError("unknown regime");
}

double scale_factor(double t, const Background& bg) {
  switch (bg.regime()) {
    case Regime::Expanding:
      if (!(t >= 1.0)) {
        throw DomainError(fmt::format("expanding scale factor needs t >= 1, got {}", t));
      }
      return std::pow(t, bg.alpha());
    case Regime::Contracting:
      if (!(t >= -1.0 && t < 0.0)) {
        throw DomainError(
            fmt::format("contracting scale factor needs -1 <= t < 0, got {}", t));
      }
      return std::pow(-t, bg.alpha());
    case Regime::Flat:
      return 1.0;
  }
  return 1.0;
}

// 1 - alpha = 1/(1 + kappa), so tau = (1 + kappa) |t|^(1/(1+kappa)) up to sign.
double tau_of_t(double t, const Background& bg) {
  const double exponent = 1.0 - bg.alpha();
  switch (bg.regime()) {
    case Regime::Expanding:
      if (!(t > 0.0)) throw DomainError(fmt::format("expanding time needs t > 0, got {}", t));
      return std::pow(t, exponent) / exponent;
    case Regime::Contracting:
      if (!(t < 0.0)) throw DomainError(fmt::format("contracting time needs t < 0, got {}", t));
      return -std::pow(-t, exponent) / exponent;
    case Regime::Flat:
      return t;
  }
  return t;
}

double t_of_tau(double tau, const Background& bg) {
  const double exponent = 1.0 - bg.alpha();
  switch (bg.regime()) {
    case Regime::Expanding:
      if (!(tau > 0.0)) throw DomainError(fmt::format("expanding tau must be > 0, got {}", tau));
      return std::pow(tau * exponent, 1.0 / exponent);
    case Regime::Contracting:
      if (!(tau < 0.0)) throw DomainError(fmt::format("contracting tau must be < 0, got {}", tau));
      return -std::pow(-tau * exponent, 1.0 / exponent);
    case Regime::Flat:
      return tau;
  }
  return tau;
}

double geometry_coefficient(double tau, const Background& bg) {
  if (bg.regime() == Regime::Flat) return 0.0;
  if (tau == 0.0) throw SingularTimeError("geometry coefficient is singular at tau = 0");
  return bg.kappa() / tau;
}

ScalarFlux ScalarFlux::mixed(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError(fmt::format("mixed flux needs 0 < beta < 1, got {}", beta));
  }
  return ScalarFlux(FluxShape::Mixed, beta);
}

double ScalarFlux::value(double v) const {
  switch (shape_) {
    case FluxShape::Quadratic: return 0.5 * v * v;
    case FluxShape::Cubic: return 0.5 * v * v * v;
    case FluxShape::Mixed:
      return 0.5 * (1.0 - beta_) * v * v + beta_ * v * v * v / 3.0;
  }
  return 0.0;
}

double ScalarFlux::derivative(double v) const {
  switch (shape_) {
    case FluxShape::Quadratic: return v;
    case FluxShape::Cubic: return 1.5 * v * v;
    case FluxShape::Mixed: return (1.0 - beta_) * v + beta_ * v * v;
  }
  return 0.0;
}

std::vector<double> ScalarFlux::critical_points() const {
  if (shape_ == FluxShape::Mixed) return {-(1.0 - beta_) / beta_, 0.0};
  return {0.0};
}

std::pair<double, double> flux_eval(const FluxModel& model, double v) {
  return {model.f.value(v), model.g.value(v)};
}

std::pair<double, double> flux_prime(const FluxModel& model, double v) {
  return {model.f.derivative(v), model.g.derivative(v)};
}

double homogeneous_solution(double v0, double tau0, double tau,
                            const Background& bg) {
  if (!(std::abs(v0) < 1.0)) {
    throw DomainError(fmt::format("homogeneous data needs |v0| < 1, got {}", v0));
  }
  if (bg.regime() == Regime::Flat) return v0;
  const bool expanding = bg.regime() == Regime::Expanding;
  const bool valid = expanding ? (tau0 > 0.0 && tau > 0.0) : (tau0 < 0.0 && tau < 0.0);
  if (!valid) {
    throw DomainError(fmt::format("times ({}, {}) invalid for a {} background",
                                  tau0, tau, to_string(bg.regime())));
  }
  // exp(2 (M(tau) - M(tau0))) with M = kappa ln|tau|.
  const double growth = std::pow(tau / tau0, 2.0 * bg.kappa());
  return v0 / std::sqrt(v0 * v0 + (1.0 - v0 * v0) * growth);
}

}  // namespace cosmoburgers
