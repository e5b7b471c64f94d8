#include "hefp/comparators.hpp"

#include <string>

#include "hefp/linear_solver.hpp"

namespace hefp {

namespace {

Real horner(const std::vector<Real>& coef, const Real& x) {
  Real acc;
  for (auto it = coef.rbegin(); it != coef.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

}  // namespace

PadeApproximant pade_from_series(const std::vector<Real>& b, int N, int M, const PrecisionContext& ctx) {
  if (N < 0 || M < 0) throw DomainError("pade: degrees must be non-negative");
  if (static_cast<int>(b.size()) < N + M + 1) {
    throw DomainError("pade: [" + std::to_string(N) + "/" + std::to_string(M) + "] needs " +
                      std::to_string(N + M + 1) + " coefficients, got " + std::to_string(b.size()));
  }
  ScopedPrecision scope(ctx);
  auto coef = [&](int i) { return i >= 0 ? b[i] : Real(0); };

  PadeApproximant pa;
  pa.N = N;
  pa.M = M;
  pa.q.emplace_back(1);
  if (M > 0) {
    // sum_{j=1}^{M} q_j b_{N+i-j} = -b_{N+i},  i = 1..M
    Matrix a(M);
    std::vector<Real> rhs;
    for (int i = 0; i < M; ++i) {
      const int row = N + 1 + i;
      for (int j = 1; j <= M; ++j) a(i, j - 1) = coef(row - j);
      rhs.push_back(-b[row]);
    }
    std::vector<Real> qs;
    try {
      qs = solve_linear(a, rhs, ctx.working_digits());
    } catch (const NumericalError& e) {
      throw NumericalError("pade: degenerate [" + std::to_string(N) + "/" + std::to_string(M) +
                           "] block: " + e.what());
    }
    for (Real& v : qs) pa.q.push_back(std::move(v));
  }
  for (int i = 0; i <= N; ++i) {
    Real s;
    for (int j = 0; j <= std::min(i, M); ++j) s += pa.q[j] * b[i - j];
    pa.p.push_back(std::move(s));
  }
  return pa;
}

PadeApproximant pade_build(const SeriesCoefficients& coeffs, int N, int M, const PrecisionContext& ctx) {
  if (coeffs.n_max < N + M + 2) {
    throw DomainError("pade_build: coefficients end at n = " + std::to_string(coeffs.n_max) + ", need " +
                      std::to_string(N + M + 2));
  }
  if (ctx.digits() < N + M) {
    throw PrecisionRuleError("pade_build: need at least " + std::to_string(N + M) + " digits for [" +
                             std::to_string(N) + "/" + std::to_string(M) + "], got " + std::to_string(ctx.digits()));
  }
  ScopedPrecision scope(ctx);
  std::vector<Real> b;
  for (int n = 0; n <= N + M; ++n) {
    Real v(coeffs.a_exact[static_cast<size_t>(n) + 2]);
    if (n % 2 == 1) v = -v;
    b.push_back(std::move(v));
  }
  return pade_from_series(b, N, M, ctx);
}

Real pade_eval_reduced(const PadeApproximant& pa, const Real& x, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  const Real den = horner(pa.q, x);
  Real scale(1);
  Real xp(1);
  for (const Real& q : pa.q) {
    const Real t = abs(q * xp);
    if (t > scale) scale = t;
    xp *= x;
  }
  if (abs(den) <= pow10(-ctx.working_digits()) * scale) {
    throw NumericalError("pade: denominator vanishes at x = " + to_string(x, 12));
  }
  return horner(pa.p, x) / den;
}

Real pade_eval(const PadeApproximant& pa, const Real& beta, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return beta * beta * pade_eval_reduced(pa, beta, ctx);
}

Real delta_transform(const std::vector<Real>& terms, int k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("delta: order must be at least 1");
  if (static_cast<int>(terms.size()) < k + 2) {
    throw DomainError("delta: order " + std::to_string(k) + " needs " + std::to_string(k + 2) + " terms");
  }
  ScopedPrecision scope(ctx);
  // delta_k = sum_j (-1)^j C(k,j) (1+j)_{k-1} s_j/w_j / sum_j (-1)^j C(k,j) (1+j)_{k-1} / w_j.
  // The common factor 1/(1+k)_{k-1} cancels. (1+j)_{k-1} = (j+k-1)!/j!.
  Real num;
  Real den;
  Real partial;
  mpz_class binom = 1;
  for (int j = 0; j <= k; ++j) {
    partial += terms[j];
    const Real& w = terms[j + 1];
    if (w.is_zero()) throw NumericalError("delta: remainder estimate vanishes at j = " + std::to_string(j));
    if (j > 0) binom = binom * (k - j + 1) / j;
    mpz_class poch = 1;
    for (int i = 1; i <= k - 1; ++i) poch *= j + i;
    Real weight(mpz_class(binom * poch));
    weight /= w;
    if (j % 2 == 1) weight = -weight;
    num += weight * partial;
    den += weight;
  }
  if (den.is_zero()) throw NumericalError("delta: transformation breakdown (zero denominator)");
  return num / den;
}

Real weniger_delta_at_order(const SeriesCoefficients& coeffs, int k, const Real& x, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("weniger_delta: order must be at least 1");
  if (coeffs.n_max < k + 3) {
    throw DomainError("weniger_delta: coefficients end at n = " + std::to_string(coeffs.n_max) + ", need " +
                      std::to_string(k + 3));
  }
  ScopedPrecision scope(ctx);
  std::vector<Real> terms;
  Real xp = x * x;
  for (int j = 0; j <= k + 1; ++j) {
    terms.push_back(Real(coeffs.a_exact[static_cast<size_t>(j) + 2]) * xp);
    xp *= x;
  }
  return delta_transform(terms, k, ctx);
}

Real weniger_delta(const SeriesCoefficients& coeffs, int n, const Real& x, const PrecisionContext& ctx) {
  if (delta_order_for_label(n) < 1) throw DomainError("weniger_delta: label n must be at least 3");
  return weniger_delta_at_order(coeffs, delta_order_for_label(n), x, ctx);
}

}  // namespace hefp
