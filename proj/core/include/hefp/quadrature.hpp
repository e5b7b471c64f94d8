#pragma once

// Double-exponential quadrature at the current thread precision.

#include <functional>
#include <optional>

#include "hefp/precision.hpp"

namespace hefp {

using RealFunction = std::function<Real(const Real&)>;

struct QuadratureResult {
  Real value;
  Real error_estimate;  // |I_l - I_{l-1}| at the accepted level
  int levels = 0;
  long evaluations = 0;
};

struct QuadratureOptions {
  int target_digits = 50;
  int max_level = 12;
  /// Nodes closer than this to the left endpoint are skipped.
  std::optional<Real> left_cutoff;
};

/// tanh-sinh rule on [a, b]. Throws NumericalError if the level sequence does
/// not settle below 10^-target_digits relative.
QuadratureResult tanh_sinh(const RealFunction& f, const Real& a, const Real& b, const QuadratureOptions& opt);

/// exp-sinh rule on [a, inf) for integrands decaying at least exponentially.
QuadratureResult exp_sinh(const RealFunction& f, const Real& a, const QuadratureOptions& opt);

}  // namespace hefp
