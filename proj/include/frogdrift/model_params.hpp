#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

namespace frogdrift {

/// Continuous model: each active frog drifts left at rate lambda > 0.
struct ContinuousParams {
  double lambda;

  explicit ContinuousParams(double lambda_) : lambda(lambda_) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
      throw std::invalid_argument("continuous model requires lambda > 0");
  }

  double drift_factor() const { return 2.0 * lambda; }
};

/// Discrete model: active frogs step left with probability p in (1/2, 1).
struct DiscreteParams {
  double p;

  explicit DiscreteParams(double p_) : p(p_) {
    if (!(p > 0.5) || !(p < 1.0))
      throw std::invalid_argument("discrete model requires 1/2 < p < 1");
    // (1-p)/(2p-1) == rho/(1-rho); both are used below, keep them consistent.
    const double lhs = decay_coefficient();
    const double rhs = rho() / (1.0 - rho());
    if (std::abs(lhs - rhs) > 1e-14 * std::abs(lhs))
      throw std::logic_error("discrete parameter identity violated");
  }

  /// Probability a frog ever moves one site further right.
  double rho() const { return (1.0 - p) / p; }

  /// Coefficient (1-p)/(2p-1) appearing in the summation criterion.
  double decay_coefficient() const { return (1.0 - p) / (2.0 * p - 1.0); }
};

using ModelParams = std::variant<ContinuousParams, DiscreteParams>;

}  // namespace frogdrift
