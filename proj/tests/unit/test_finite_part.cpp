#include <doctest.h>

#include "hefp/errors.hpp"
#include "hefp/finite_part.hpp"
#include "hefp/heisenberg_euler.hpp"

using namespace hefp;

namespace {

FinitePartIntegrand exponential(const Real& b) {
  FinitePartIntegrand f;
  f.taylor = [b](int k) {
    Real t = pow(-b, k);
    for (int i = 2; i <= k; ++i) t /= i;
    return t;
  };
  f.f = [b](const Real& x) { return exp(-b * x); };
  return f;
}

}  // namespace

TEST_SUITE("finite_part") {
  TEST_CASE("low orders in closed form") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    const Real b("2.5");
    CHECK(agree_digits(fp_exp(b, 1, ctx), -Real::euler_gamma() - log(b), 55));
    CHECK(agree_digits(fp_exp(b, 2, ctx), b * (Real::euler_gamma() + log(b) - Real(1)), 55));
  }

  TEST_CASE("closed form against the subtraction oracle") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    for (const char* bs : {"0.5", "1", "3"}) {
      for (int m : {1, 2, 4}) {
        const Real b(bs);
        const Real closed = fp_exp(b, m, ctx);
        const Real oracle = fp_canonical_oracle(exponential(b), Real("0.75"), m, ctx);
        CHECK_MESSAGE(agree_digits(closed, oracle, 30), "b = " << bs << ", m = " << m);
      }
    }
  }

  TEST_CASE("the split point does not matter") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    const auto f = exponential(Real(1));
    CHECK(agree_digits(fp_canonical_oracle(f, Real("0.3"), 3, ctx), fp_canonical_oracle(f, Real(2), 3, ctx), 30));
  }

  TEST_CASE("scaling law of the finite part") {
    // FP int f(lx)/x^m = l^(m-1) [FP int f/x^m - f^(m-1)(0)/(m-1)! ln l]
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    const Real b("0.8"), lambda("3.5");
    for (int m = 1; m <= 6; ++m) {
      Real coef = pow(-b, m - 1);
      for (int i = 2; i <= m - 1; ++i) coef /= i;
      const Real rhs = pow(lambda, static_cast<long>(m - 1)) * (fp_exp(b, m, ctx) - coef * log(lambda));
      CHECK_MESSAGE(agree_digits(fp_exp(b * lambda, m, ctx), rhs, 50), "m = " << m);
    }
    const Real a("1.3");
    for (int m = 1; m <= 4; ++m) {
      Complex coef = Complex(Real(1));
      for (int i = 1; i <= m - 1; ++i) coef = coef * Complex(Real(0), a) / Real(i);
      const Complex rhs = (fp_osc(a, m, ctx) - coef * log(lambda)) * pow(lambda, static_cast<long>(m - 1));
      CHECK_MESSAGE(agree_digits(fp_osc(a * lambda, m, ctx), rhs, 50), "m = " << m);
    }
  }

  TEST_CASE("oscillatory finite part is the continuation b -> -ia") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    // m = 1: -gamma - log(-i a) = -gamma - ln a + i pi/2 for a > 0
    const Real a(2);
    const Complex v = fp_osc(a, 1, ctx);
    CHECK(agree_digits(v.real(), -Real::euler_gamma() - log(a), 50));
    CHECK(agree_digits(v.imag(), Real::pi() / 2L, 50));
  }

  TEST_CASE("Laguerre specialisation equals fp_exp at b = 1/2") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    for (int k = 0; k <= 10; ++k) {
      for (int l = 0; l <= 2 * k; ++l) {
        CHECK(agree_digits(fp_laguerre_exp(k, l, ctx), fp_exp(Real("0.5"), 2 * k + 1 - l, ctx), 55));
      }
    }
    CHECK_THROWS_AS(fp_laguerre_exp(1, 3, ctx), DomainError);
  }

  TEST_CASE("csch finite part against the subtraction oracle") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    const SeriesCoefficients coeffs = weak_field_coeffs(40, ctx);
    for (const char* bs : {"0.25", "1", "4"}) {
      const Real beta(bs);
      const Real sb = sqrt(beta);
      // e^(-t) * t csch(sqrt(beta) t) = e^(-t) * sum_n c_n beta^n t^(2n) / sqrt(beta)
      FinitePartIntegrand f;
      f.taylor = [&coeffs, beta, sb](int k) {
        Real sum;
        for (int j = 0; 2 * j <= k; ++j) {
          Real e = pow(Real(-1), k - 2 * j);
          for (int i = 2; i <= k - 2 * j; ++i) e /= i;
          sum += coeffs.c[j] * pow(beta, static_cast<long>(j)) * e;
        }
        return sum / sb;
      };
      f.f = [sb](const Real& t) { return exp(-t) * t / sinh(sb * t); };
      const Real oracle = fp_canonical_oracle(f, Real("0.5") / sb, 3, ctx);
      CHECK_MESSAGE(agree_digits(fp_csch_exp(beta, ctx), oracle, 30), "beta = " << bs);
    }
  }

  TEST_CASE("tagged evaluation") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    const auto v = fp_evaluate(FinitePartKind::csch_exponential, Real(1), 7, ctx);
    CHECK(v.order_m == 3);
    CHECK(v.value.imag().is_zero());
    const auto w = fp_evaluate(FinitePartKind::exponential, Real(1), 2, ctx);
    CHECK(w.order_m == 2);
    CHECK(agree_digits(w.value.real(), fp_exp(Real(1), 2, ctx), 55));
  }

  TEST_CASE("invalid orders and parameters") {
    const auto ctx = PrecisionContext::with_precision(40);
    CHECK_THROWS_AS(fp_exp(Real(1), 0, ctx), DomainError);
    CHECK_THROWS_AS(fp_exp(Real(-1), 2, ctx), DomainError);
    CHECK_THROWS_AS(fp_osc(Real(0), 2, ctx), DomainError);
  }
}
