#include "hefp/finite_part.hpp"

#include <cmath>
#include <string>

#include "hefp/special_functions.hpp"

namespace hefp {

namespace {

Real factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Real(f);
}

void require_order(int m) {
  if (m < 1) throw DomainError("finite part: pole order must be >= 1, got " + std::to_string(m));
}

}  // namespace

Real fp_exp(const Real& b, int m, const PrecisionContext& ctx) {
  require_order(m);
  if (b.sign() <= 0) throw DomainError("fp_exp: b must be positive");
  ScopedPrecision scope(ctx);
  Real r = pow(b, static_cast<long>(m - 1)) / factorial(m - 1) * (log(b) - digamma_int(m, ctx));
  return (m % 2 == 0) ? r : -r;
}

Complex fp_osc(const Real& a, int m, const PrecisionContext& ctx) {
  require_order(m);
  if (a.is_zero()) throw DomainError("fp_osc: a must be nonzero");
  ScopedPrecision scope(ctx);
  // (i a)^(m-1) is real or imaginary according to (m-1) mod 4.
  const Real mag = pow(a, static_cast<long>(m - 1)) / factorial(m - 1);
  Complex ia_pow;
  switch ((m - 1) % 4) {
    case 0: ia_pow = Complex(mag, Real(0)); break;
    case 1: ia_pow = Complex(Real(0), mag); break;
    case 2: ia_pow = Complex(-mag, Real(0)); break;
    default: ia_pow = Complex(Real(0), -mag); break;
  }
  const Real half_pi = Real::pi() / 2L;
  const Complex bracket(log(abs(a)) - digamma_int(m, ctx), a.sign() > 0 ? -half_pi : half_pi);
  return -(ia_pow * bracket);
}

Real fp_csch_exp(const Real& beta, const PrecisionContext& ctx) {
  if (beta.sign() <= 0) throw DomainError("fp_csch_exp: beta must be positive");
  ScopedPrecision scope(ctx);
  const Real sb = sqrt(beta);
  const Complex a((Real(1) + sb) / (sb * 2L), Real(0));
  const Real z = hurwitz_zeta_neg1(a, ctx).real();
  const Real zd = hurwitz_zeta_sderiv_neg1(a, ctx).real();
  const Real l = log(beta) + log(Real(4)) + Real::euler_gamma() * 2L - Real(2);
  return sb * 2L * (l * z - zd * 2L);
}

Complex fp_csch_osc(const Real& kappa, const PrecisionContext& ctx) {
  if (kappa.sign() <= 0) throw DomainError("fp_csch_osc: kappa must be positive");
  ScopedPrecision scope(ctx);
  const Real sk = sqrt(kappa);
  const Complex a(Real(1) / 2L, Real(1) / (sk * 2L));
  const Complex z = hurwitz_zeta_neg1(a, ctx);
  const Complex zd = hurwitz_zeta_sderiv_neg1(a, ctx);
  const Real coef = digamma_int(2, ctx) - log(sk * 2L);
  return (z * coef + zd) * (sk * -4L);
}

Real fp_laguerre_exp(int k, int l, const PrecisionContext& ctx) {
  if (k < 0 || l < 0) throw DomainError("fp_laguerre_exp: k and l must be non-negative");
  if (l > 2 * k) throw DomainError("fp_laguerre_exp: l > 2k is a convergent moment, not a finite part");
  ScopedPrecision scope(ctx);
  const int p = 2 * k - l;
  Real r = ldexp(Real(1), -p) / factorial(p) * (-Real::ln2() - digamma_int(p + 1, ctx));
  return ((1 - l) % 2 == 0) ? r : -r;
}

FinitePartValue fp_evaluate(FinitePartKind kind, const Real& param, int m, const PrecisionContext& ctx) {
  switch (kind) {
    case FinitePartKind::exponential: return {Complex(fp_exp(param, m, ctx)), m, kind};
    case FinitePartKind::oscillatory: return {fp_osc(param, m, ctx), m, kind};
    case FinitePartKind::csch_exponential: return {Complex(fp_csch_exp(param, ctx)), 3, kind};
    case FinitePartKind::csch_oscillatory: return {fp_csch_osc(param, ctx), 3, kind};
  }
  throw DomainError("fp_evaluate: unknown kind");
}

Real fp_canonical_oracle(const FinitePartIntegrand& integrand, const Real& split, int m, const PrecisionContext& ctx) {
  require_order(m);
  if (split.sign() <= 0) throw DomainError("fp_canonical_oracle: split point must be positive");
  ScopedPrecision scope(ctx);
  const int target = ctx.working_digits();
  const int base_digits = target + 10;

  const auto subtracted = [&](const Real& x) -> Real {
    // f - T_{m-1} loses about m*log10(1/x) digits to cancellation.
    const long e = x.decimal_exponent();
    const int extra = e < 0 ? static_cast<int>(-e) * m : 0;
    Real out;
    {
      ScopedPrecision boosted(digits_to_bits(base_digits + extra));
      Real poly;
      Real xp(1);
      for (int k = 0; k < m; ++k) {
        poly += integrand.taylor(k) * xp;
        xp *= x;
      }
      out = (integrand.f(x) - poly) / xp;
    }
    return rounded(out);
  };

  QuadratureOptions opt;
  opt.target_digits = target;
  opt.left_cutoff = pow10(-(target + 5));
  const QuadratureResult near = tanh_sinh(subtracted, Real(0), split, opt);

  opt.left_cutoff.reset();
  const auto tail_fn = [&](const Real& x) { return integrand.f(x) / pow(x, static_cast<long>(m)); };
  const QuadratureResult far = exp_sinh(tail_fn, split, opt);

  Real analytic;
  for (int k = 0; k <= m - 2; ++k) {
    const long p = k + 1 - m;
    analytic += integrand.taylor(k) * pow(split, p) / Real(p);
  }
  analytic += integrand.taylor(m - 1) * log(split);
  return near.value + analytic + far.value;
}

}  // namespace hefp
