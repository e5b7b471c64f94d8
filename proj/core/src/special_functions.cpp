#include "hefp/special_functions.hpp"

#include <cmath>
#include <mutex>
#include <string>

namespace hefp {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<mpq_class> g_bernoulli;  // B_{2n}, grow-only

// Tangent numbers T_1..T_n (Brent-Harvey), then
// B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
std::vector<mpq_class> compute_bernoulli(int N) {
  std::vector<mpq_class> out(static_cast<size_t>(N) + 1);
  out[0] = 1;
  if (N == 0) return out;
  std::vector<mpz_class> t(static_cast<size_t>(N) + 1);
  t[1] = 1;
  for (int k = 2; k <= N; ++k) t[k] = (k - 1) * t[k - 1];
  for (int k = 2; k <= N; ++k) {
    for (int j = k; j <= N; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  }
  for (int k = 1; k <= N; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    mpq_class b(2 * k * t[k], four_k * (four_k - 1));
    b.canonicalize();
    out[k] = (k % 2 == 1) ? b : mpq_class(-b);
  }
  return out;
}

struct Dual {
  Complex v;
  Complex d;
};

Dual mul(const Dual& x, const Dual& y) { return {x.v * y.v, x.v * y.d + x.d * y.v}; }

bool non_positive_integer(const Complex& a) {
  return a.imag().is_zero() && a.real().is_integer() && a.real().sign() <= 0;
}

}  // namespace

std::vector<mpq_class> bernoulli_exact(int N) {
  if (N < 0) throw DomainError("bernoulli: N must be non-negative");
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (static_cast<int>(g_bernoulli.size()) <= N) {
    const int grow = std::max(N, 2 * static_cast<int>(g_bernoulli.size()));
    g_bernoulli = compute_bernoulli(grow);
  }
  return {g_bernoulli.begin(), g_bernoulli.begin() + N + 1};
}

BernoulliTable bernoulli(int N, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  BernoulliTable table;
  table.N = N;
  for (const mpq_class& b : bernoulli_exact(N)) table.values.emplace_back(b);
  return table;
}

Real digamma_int(long m, const PrecisionContext& ctx) {
  if (m <= 0) throw DomainError("digamma_int: m must be positive, got " + std::to_string(m));
  ScopedPrecision scope(ctx);
  mpq_class h = 0;
  for (long k = 1; k < m; ++k) h += mpq_class(1, k);
  return Real(h) - Real::euler_gamma();
}

Complex laguerre(int m, const Complex& z, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("laguerre: degree must be non-negative");
  ScopedPrecision scope(ctx);
  Complex prev(1);
  if (m == 0) return prev;
  Complex cur = Complex(1) - z;
  for (int k = 1; k < m; ++k) {
    Complex next = (Complex(2 * k + 1) - z) * cur - prev * Real(k);
    next /= Real(k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Real laguerre(int m, const Real& z, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("laguerre: degree must be non-negative");
  ScopedPrecision scope(ctx);
  Real prev(1);
  if (m == 0) return prev;
  Real cur = Real(1) - z;
  for (int k = 1; k < m; ++k) {
    Real next = (Real(2 * k + 1) - z) * cur - prev * k;
    next /= k + 1;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ZetaWithDerivative hurwitz_zeta_with_derivative(const Complex& s, const Complex& a, int target_digits) {
  if (s.real() == 1L && s.imag().is_zero()) throw DomainError("hurwitz_zeta: pole at s = 1");
  if (non_positive_integer(a)) throw DomainError("hurwitz_zeta: a is a non-positive integer");

  // Shift so that |a+N| is large enough for the asymptotic tail to reach
  // 10^-target before its terms start growing (optimal truncation near 2 pi |a+N|).
  const double radius = 0.6 * target_digits + 10.0 + std::abs(s.real().to_double()) + std::abs(s.imag().to_double());
  const double re_a = a.real().to_double();
  const long N = std::max(0L, static_cast<long>(std::ceil(radius - re_a)));

  Complex value, deriv;
  for (long k = 0; k < N; ++k) {
    const Complex w = a + Complex(Real(k));
    const Complex lw = log(w);
    const Complex p = exp(-(s * lw));
    value += p;
    deriv -= lw * p;
  }

  const Complex x = a + Complex(Real(N));
  const Complex lx = log(x);
  const Complex px = exp(-(s * lx));  // x^-s
  const Complex sm1 = s - Complex(1);
  const Complex x1s = x * px;  // x^(1-s)
  value += x1s / sm1;
  deriv -= lx * x1s / sm1 + x1s / (sm1 * sm1);
  value += px / Real(2);
  deriv -= lx * px / Real(2);

  const Real eps = pow10(-target_digits);
  const Complex inv_x2 = Complex(1) / (x * x);
  const int j_cap = std::max(50, 2 * target_digits);
  const std::vector<mpq_class> b = bernoulli_exact(j_cap);

  Dual poch{s, Complex(1)};  // (s)_{2j-1}
  Complex q = x1s;           // advanced to x^(-s-2j+1) below
  mpz_class fact2j = 1;
  bool converged = false;
  for (int j = 1; j <= j_cap; ++j) {
    q *= inv_x2;
    fact2j *= (2 * j - 1) * (2 * j);
    const Real coef(mpq_class(b[j] / fact2j));
    const Complex tv = coef * poch.v * q;
    const Complex td = coef * (poch.d * q - poch.v * lx * q);
    value += tv;
    deriv += td;
    const Real scale = max(max(abs(value), abs(deriv)), Real(1));
    if (j > 1 && abs(tv) <= eps * scale && abs(td) <= eps * scale) {
      converged = true;
      break;
    }
    const Complex f1 = s + Complex(2 * j - 1);
    const Complex f2 = s + Complex(2 * j);
    poch = mul(mul(poch, Dual{f1, Complex(1)}), Dual{f2, Complex(1)});
  }
  if (!converged) throw NumericalError("hurwitz_zeta: Euler-Maclaurin tail did not converge");
  return {value, deriv};
}

Complex hurwitz_zeta(const Complex& s, const Complex& a, const PrecisionContext& ctx) {
  Complex result;
  {
    ScopedPrecision inner(ctx.bits() + 64);
    result = hurwitz_zeta_with_derivative(s, a, ctx.working_digits()).value;
  }
  ScopedPrecision scope(ctx);
  return rounded(result);
}

Complex hurwitz_zeta_neg1(const Complex& a, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  Complex r = a * a - a + Complex(Real(mpq_class(1, 6)));
  return r * Real(mpq_class(-1, 2));
}

Complex hurwitz_zeta_sderiv_neg1(const Complex& a, const PrecisionContext& ctx) {
  if (a.imag().is_zero() && a.real().sign() <= 0) {
    throw DomainError("hurwitz_zeta_sderiv_neg1: a on the non-positive real axis");
  }
  Complex result;
  {
    ScopedPrecision inner(ctx.bits() + 64);
    result = hurwitz_zeta_with_derivative(Complex(-1), a, ctx.working_digits()).derivative;
  }
  ScopedPrecision scope(ctx);
  return rounded(result);
}

}  // namespace hefp
