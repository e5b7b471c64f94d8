#include "hefp/heisenberg_euler.hpp"

#include <mutex>
#include <string>

#include "hefp/finite_part.hpp"
#include "hefp/quadrature.hpp"
#include "hefp/special_functions.hpp"

namespace hefp {

namespace {

void require_positive(const Real& x, const char* what) {
  if (x.sign() <= 0 || !x.is_finite()) throw DomainError(std::string(what) + " must be positive");
}

// c_n = (2 - 4^n) B_{2n} / (2n)!
std::vector<mpq_class> csch_coefficients(int n_max) {
  const std::vector<mpq_class> b = bernoulli_exact(n_max);
  std::vector<mpq_class> c(static_cast<size_t>(n_max) + 1);
  mpz_class fact = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= (2 * n - 1) * (2 * n);
    mpz_class four_n;
    mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
    c[n] = mpq_class(2 - four_n) * b[n] / fact;
    c[n].canonicalize();
  }
  return c;
}

std::mutex g_csch_mutex;
std::vector<mpq_class> g_csch;  // grow-only

std::vector<mpq_class> cached_csch_coefficients(int n_max) {
  std::lock_guard<std::mutex> lock(g_csch_mutex);
  if (static_cast<int>(g_csch.size()) <= n_max) g_csch = csch_coefficients(n_max);
  return {g_csch.begin(), g_csch.begin() + n_max + 1};
}

template <class T>
T chi_series(const T& x2, int target_digits) {
  // sum_{n>=2} c_n x^(2n); |c_{n+1}/c_n| -> 1/pi^2.
  const Real eps = pow10(-target_digits);
  const int n_cap = 8 + target_digits;
  const std::vector<mpq_class> c = cached_csch_coefficients(n_cap);
  T power = x2 * x2;
  T sum;
  for (int n = 2; n <= n_cap; ++n) {
    const T term = power * Real(c[n]);
    sum += term;
    if (abs(term) <= eps * abs(sum)) break;
    power *= x2;
  }
  return sum;
}

Real ln4() { return Real::ln2() * 2L; }

}  // namespace

SeriesCoefficients weak_field_coeffs(int n_max, const PrecisionContext& ctx) {
  if (n_max < 2) throw DomainError("weak_field_coeffs: n_max must be at least 2");
  ScopedPrecision scope(ctx);
  SeriesCoefficients s;
  s.n_max = n_max;
  s.digits = ctx.digits();
  s.c_exact = csch_coefficients(n_max);
  s.a_exact.assign(static_cast<size_t>(n_max) + 1, mpq_class(0));
  for (int n = 2; n <= n_max; ++n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * n - 3));
    mpq_class an = mpq_class(f) * s.c_exact[n];
    if (n % 2 == 1) an = -an;
    s.a_exact[n] = an;
  }
  for (const mpq_class& q : s.a_exact) s.a.emplace_back(q);
  for (const mpq_class& q : s.c_exact) s.c.emplace_back(q);
  return s;
}

Real partial_sum_magnetic(const Real& beta, int d, const PrecisionContext& ctx) {
  if (d < 0) throw DomainError("partial_sum_magnetic: d must be non-negative");
  const SeriesCoefficients s = weak_field_coeffs(d + 2, ctx);
  ScopedPrecision scope(ctx);
  const Real x = -beta;
  Real power = x * x;
  Real sum;
  for (int n = 2; n <= d + 2; ++n) {
    sum += s.a_n(n) * power;
    power *= x;
  }
  return sum;
}

Complex chi(const Complex& x, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (abs(x) < Real(0.25)) return chi_series(x * x, ctx.working_digits());
  const Complex sh = sinh(x);
  if (sh.real().is_zero() && sh.imag().is_zero()) throw DomainError("chi: pole of csch");
  if (x.real().is_zero() && (x.imag() / Real::pi()).is_integer()) throw DomainError("chi: pole of csch");
  return x / sh - Complex(1) + x * x / Real(6);
}

Real chi(const Real& x, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (abs(x) < Real(0.25)) return chi_series(x * x, ctx.working_digits());
  return x / sinh(x) - Real(1) + x * x / 6L;
}

Real exact_magnetic(const Real& beta, const PrecisionContext& ctx) {
  require_positive(beta, "beta");
  ScopedPrecision scope(ctx);
  const Real sb = sqrt(beta);
  const Real lb = log(beta);
  const Complex a((Real(1) + sb) / (sb * 2L), Real(0));
  const Real zd = hurwitz_zeta_sderiv_neg1(a, ctx).real();
  return beta * lb / 12L - lb / 4L + beta * (ln4() / 12L - Real(1) / 6L) - ln4() / 4L - Real(1) / 4L -
         beta * zd * 4L;
}

Real exact_magnetic_assembly(const Real& beta, const PrecisionContext& ctx) {
  require_positive(beta, "beta");
  ScopedPrecision scope(ctx);
  const Real one(1);
  return sqrt(beta) * fp_csch_exp(beta, ctx) - fp_exp(one, 3, ctx) + beta / 6L * fp_exp(one, 1, ctx);
}

Complex exact_electric(const Real& kappa, const PrecisionContext& ctx) {
  require_positive(kappa, "kappa");
  ScopedPrecision scope(ctx);
  const Real sk = sqrt(kappa);
  const Complex a(Real(1) / 2L, Real(1) / (sk * 2L));
  const Complex zd = hurwitz_zeta_sderiv_neg1(a, ctx);
  const Real pi = Real::pi();
  const Real re = kappa / 6L - Real(1) / 4L - (kappa / 6L + Real(1) / 2L) * log(sk * 2L);
  const Real im = pi / 4L + kappa * pi / 12L;
  return Complex(re, im) + zd * (kappa * 4L);
}

Complex exact_electric_assembly(const Real& kappa, const PrecisionContext& ctx) {
  require_positive(kappa, "kappa");
  ScopedPrecision scope(ctx);
  const Real minus_one(-1);
  return fp_csch_osc(kappa, ctx) * (-sqrt(kappa)) + fp_osc(minus_one, 3, ctx) -
         fp_osc(minus_one, 1, ctx) * (kappa / 6L);
}

Real quad_magnetic_oracle(const Real& beta, const Real& tol, const PrecisionContext& ctx) {
  require_positive(beta, "beta");
  if (tol.sign() <= 0) throw DomainError("quad_magnetic_oracle: tol must be positive");
  ScopedPrecision scope(ctx);
  const Real sb = sqrt(beta);
  const auto integrand = [&](const Real& t) -> Real {
    if (t.is_zero()) return Real(0);
    return exp(-t) * chi(sb * t, ctx) / pow(t, 3L);
  };
  QuadratureOptions opt;
  opt.target_digits = std::min(ctx.working_digits(), static_cast<int>(-log10(tol).to_double()) + 5);
  const Real split = Real(1) / sb;
  const QuadratureResult head = tanh_sinh(integrand, Real(0), split, opt);
  const QuadratureResult tail = exp_sinh(integrand, split, opt);
  return head.value + tail.value;
}

Complex continuation_check(const Real& kappa, const PrecisionContext& ctx, ContinuationBranch branch) {
  require_positive(kappa, "kappa");
  ScopedPrecision scope(ctx);
  const Real pi = Real::pi();
  const Complex l(log(kappa), branch == ContinuationBranch::lower ? -pi : pi);  // ln beta
  const Complex sb = exp(l / Real(2));                                          // sqrt beta
  const Complex beta(-kappa, Real(0));
  const Complex a = (Complex(1) + sb) / (sb * Real(2));
  const Complex zd = hurwitz_zeta_sderiv_neg1(a, ctx);
  const Real l4 = ln4();
  return beta * l / Real(12) - l / Real(4) + beta * (l4 / 12L - Real(1) / 6L) -
         Complex(l4 / 4L + Real(1) / 4L) - beta * zd * Real(4);
}

Real strong_field_asymptote(const Real& beta, const PrecisionContext& ctx) {
  require_positive(beta, "beta");
  ScopedPrecision scope(ctx);
  return beta * log(beta) / 12L + Real::ln2() / 6L * beta;
}

Real pair_production_rate(const Real& kappa, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return exact_electric(kappa, ctx).imag() * 2L;
}

}  // namespace hefp
