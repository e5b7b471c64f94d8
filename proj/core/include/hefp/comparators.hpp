#pragma once

// Padé approximants and the Weniger delta transformation of the weak-field series.

#include <vector>

#include "hefp/heisenberg_euler.hpp"
#include "hefp/precision.hpp"

namespace hefp {

/// p(x)/q(x) for the reduced series sum_{n>=0} a_{n+2} (-beta)^n; q[0] = 1.
struct PadeApproximant {
  int N = 0;
  int M = 0;
  std::vector<Real> p;
  std::vector<Real> q;
};

/// Padé approximant [N/M] of a power series given by its first N+M+1 coefficients.
PadeApproximant pade_from_series(const std::vector<Real>& b, int N, int M, const PrecisionContext& ctx);

/// [N/M] of b_n = a_{n+2} (-1)^n. Needs coeffs.n_max >= N+M+2.
PadeApproximant pade_build(const SeriesCoefficients& coeffs, int N, int M, const PrecisionContext& ctx);

/// p(x)/q(x) without the prefactor.
Real pade_eval_reduced(const PadeApproximant& pa, const Real& x, const PrecisionContext& ctx);

/// beta^2 p(beta)/q(beta). For the electric field pass beta = -kappa.
Real pade_eval(const PadeApproximant& pa, const Real& beta, const PrecisionContext& ctx);

/// Delta transformation of order k >= 1 applied to the series sum_j terms[j],
/// with shift 1 and remainder estimates omega_j = terms[j+1]. Uses terms[0..k+1].
Real delta_transform(const std::vector<Real>& terms, int k, const PrecisionContext& ctx);

/// Order of the transformation behind the table label delta_n.
inline int delta_order_for_label(int n) { return n - 2; }

/// Delta transformation of order k >= 1 of the terms t_j = a_{j+2} x^(j+2),
/// x = -beta (magnetic) or +kappa (electric).
Real weniger_delta_at_order(const SeriesCoefficients& coeffs, int k, const Real& x, const PrecisionContext& ctx);

/// delta_n by table label, i.e. weniger_delta_at_order with k = delta_order_for_label(n).
Real weniger_delta(const SeriesCoefficients& coeffs, int n, const Real& x, const PrecisionContext& ctx);

}  // namespace hefp
