#pragma once

// Hadamard finite parts of integrals with a pole of order m at the origin.

#include <functional>

#include "hefp/precision.hpp"
#include "hefp/quadrature.hpp"

namespace hefp {

enum class FinitePartKind { exponential, oscillatory, csch_exponential, csch_oscillatory };

struct FinitePartValue {
  Complex value;
  int order_m = 1;
  FinitePartKind kind = FinitePartKind::exponential;
};

/// FP of the integral of e^(-b x) / x^m over (0, inf), b > 0.
Real fp_exp(const Real& b, int m, const PrecisionContext& ctx);

/// FP of the integral of e^(i a x) / x^m over (0, inf), a != 0.
Complex fp_osc(const Real& a, int m, const PrecisionContext& ctx);

/// FP of the integral of e^(-t) csch(sqrt(beta) t) / t^2 over (0, inf).
Real fp_csch_exp(const Real& beta, const PrecisionContext& ctx);

/// FP of the integral of e^(-i t) csch(sqrt(kappa) t) / t^2 over (0, inf).
Complex fp_csch_osc(const Real& kappa, const PrecisionContext& ctx);

/// FP of the integral of e^(-x/2) / x^(2k+1-l) over (0, inf), 0 <= l <= 2k.
Real fp_laguerre_exp(int k, int l, const PrecisionContext& ctx);

/// Tagged evaluation. `param` is b, a, beta or kappa according to `kind`;
/// m is ignored for the csch kinds (their pole order is 3).
FinitePartValue fp_evaluate(FinitePartKind kind, const Real& param, int m, const PrecisionContext& ctx);

struct FinitePartIntegrand {
  /// k-th Taylor coefficient f^(k)(0)/k!, evaluated at the current precision.
  std::function<Real(int)> taylor;
  /// f itself, evaluated at the current precision.
  RealFunction f;
};

/// Finite part straight from the definition: subtract the Taylor polynomial of
/// degree m-1 on (0, split], integrate the subtracted terms analytically, and
/// integrate f / x^m ordinarily on [split, inf). The integrand near 0 is
/// evaluated with enough extra digits to absorb the subtraction.
Real fp_canonical_oracle(const FinitePartIntegrand& integrand, const Real& split, int m, const PrecisionContext& ctx);

}  // namespace hefp
