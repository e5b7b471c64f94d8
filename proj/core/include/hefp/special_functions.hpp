#pragma once

#include <vector>

#include <gmpxx.h>

#include "hefp/precision.hpp"

namespace hefp {

/// B_0, B_2, ..., B_{2N}; values[n] holds B_{2n}.
struct BernoulliTable {
  int N = 0;
  std::vector<Real> values;

  const Real& b2n(int n) const { return values.at(static_cast<size_t>(n)); }
};

/// Exact B_0, B_2, ..., B_{2N} as rationals. Backed by a process-wide,
/// grow-only cache that is safe to read from several threads.
std::vector<mpq_class> bernoulli_exact(int N);

BernoulliTable bernoulli(int N, const PrecisionContext& ctx);

/// psi(m) = -gamma + H_{m-1}. Throws DomainError for m <= 0.
Real digamma_int(long m, const PrecisionContext& ctx);

Complex laguerre(int m, const Complex& z, const PrecisionContext& ctx);
Real laguerre(int m, const Real& z, const PrecisionContext& ctx);

/// zeta(s, a) by Euler-Maclaurin summation on the principal branch of (a+k)^(-s).
/// Throws DomainError for s = 1 or a in {0, -1, -2, ...}.
Complex hurwitz_zeta(const Complex& s, const Complex& a, const PrecisionContext& ctx);

/// zeta(-1, a) = -(a^2 - a + 1/6)/2.
Complex hurwitz_zeta_neg1(const Complex& a, const PrecisionContext& ctx);

/// d/ds zeta(s, a) at s = -1. Throws DomainError when a lies on the
/// non-positive real axis.
Complex hurwitz_zeta_sderiv_neg1(const Complex& a, const PrecisionContext& ctx);

/// zeta(s, a) and d/ds zeta(s, a) together, at the current thread precision.
struct ZetaWithDerivative {
  Complex value;
  Complex derivative;
};
ZetaWithDerivative hurwitz_zeta_with_derivative(const Complex& s, const Complex& a, int target_digits);

}  // namespace hefp
