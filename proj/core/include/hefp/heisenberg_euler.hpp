#pragma once

// Spin-0 Heisenberg-Euler function f for constant magnetic (beta) and
// electric (kappa) backgrounds, without the m^4/16pi^2 prefactor.

#include <vector>

#include <gmpxx.h>

#include "hefp/precision.hpp"

namespace hefp {

/// Bumped whenever the coefficient generator changes; part of cache keys.
inline constexpr int kCoefficientGeneratorVersion = 1;

/// f = sum_{n>=2} a_n (-beta)^n with x csch x = sum_n c_n x^(2n).
struct SeriesCoefficients {
  int n_max = 0;
  int digits = 0;
  int generator_version = kCoefficientGeneratorVersion;
  std::vector<mpq_class> a_exact;  // index n, entries 0 and 1 unused
  std::vector<mpq_class> c_exact;  // index n, from 0
  std::vector<Real> a;
  std::vector<Real> c;

  const Real& a_n(int n) const { return a.at(static_cast<size_t>(n)); }
};

SeriesCoefficients weak_field_coeffs(int n_max, const PrecisionContext& ctx);

/// sum_{n=2}^{d+2} a_n (-beta)^n.
Real partial_sum_magnetic(const Real& beta, int d, const PrecisionContext& ctx);

/// chi(x) = x csch x - 1 + x^2/6; power series below |x| = 1/4.
Complex chi(const Complex& x, const PrecisionContext& ctx);
Real chi(const Real& x, const PrecisionContext& ctx);

Real exact_magnetic(const Real& beta, const PrecisionContext& ctx);
/// Same value assembled from the three finite parts of the split integrand.
Real exact_magnetic_assembly(const Real& beta, const PrecisionContext& ctx);

Complex exact_electric(const Real& kappa, const PrecisionContext& ctx);
Complex exact_electric_assembly(const Real& kappa, const PrecisionContext& ctx);

/// Direct quadrature of the proper-time integral for f(beta).
Real quad_magnetic_oracle(const Real& beta, const Real& tol, const PrecisionContext& ctx);

enum class ContinuationBranch {
  lower,  // ln beta = ln kappa - i pi, sqrt(beta) = -i sqrt(kappa)
  upper,  // ln beta = ln kappa + i pi, sqrt(beta) = +i sqrt(kappa)
};

/// The magnetic closed form continued to beta = -kappa along `branch`.
/// The lower branch reproduces exact_electric.
Complex continuation_check(const Real& kappa, const PrecisionContext& ctx,
                           ContinuationBranch branch = ContinuationBranch::lower);

/// beta ln(beta)/12 + (ln 2/6) beta.
Real strong_field_asymptote(const Real& beta, const PrecisionContext& ctx);

/// 2 Im f(kappa).
Real pair_production_rate(const Real& kappa, const PrecisionContext& ctx);

}  // namespace hefp
