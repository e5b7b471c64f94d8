#include <doctest.h>

#include "hefp/errors.hpp"
#include "hefp/heisenberg_euler.hpp"

using namespace hefp;

namespace {

// Coefficients of x csch x = 1 / (sinh x / x), by power-series inversion in x^2.
std::vector<mpq_class> csch_by_inversion(int n_max) {
  std::vector<mpq_class> s(static_cast<size_t>(n_max) + 1);
  mpz_class f = 1;
  for (int k = 0; k <= n_max; ++k) {
    if (k > 0) f *= (2 * k) * (2 * k + 1);
    s[k] = mpq_class(1, 1) / mpq_class(f);
  }
  std::vector<mpq_class> c(static_cast<size_t>(n_max) + 1);
  c[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    mpq_class acc = 0;
    for (int k = 1; k <= n; ++k) acc += s[k] * c[n - k];
    c[n] = -acc;
  }
  return c;
}

}  // namespace

TEST_SUITE("heisenberg_euler") {
  TEST_CASE("first coefficients") {
    const auto ctx = PrecisionContext::with_precision(30);
    const auto s = weak_field_coeffs(3, ctx);
    CHECK(s.a_exact[2] == mpq_class(7, 360));
    CHECK(s.a_exact[3] == mpq_class(31, 2520));
    CHECK(s.generator_version == kCoefficientGeneratorVersion);
    CHECK_THROWS_AS(weak_field_coeffs(1, ctx), DomainError);
  }

  TEST_CASE("coefficients against series inversion") {
    const int n_max = 60;
    const auto ctx = PrecisionContext::with_precision(30);
    const auto s = weak_field_coeffs(n_max, ctx);
    const auto c = csch_by_inversion(n_max);
    for (int n = 2; n <= n_max; ++n) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * n - 3));
      const mpq_class a = (n % 2 == 0 ? 1 : -1) * mpq_class(f) * c[n];
      CHECK_MESSAGE(s.a_exact[n] == a, "n = " << n);
      CHECK(s.a_exact[n] > 0);
    }
  }

  TEST_CASE("partial sums") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    CHECK(rounds_to(partial_sum_magnetic(Real("0.01"), 9, ctx), "1.932384796847e-6"));
    CHECK(rounds_to(partial_sum_magnetic(Real("0.01"), 0, ctx), "1.9444444444e-6"));
  }

  TEST_CASE("magnetic closed form by three routes") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    for (const char* b : {"0.05", "0.7", "3", "40"}) {
      const Real beta(b);
      const Real v = exact_magnetic(beta, ctx);
      CHECK_MESSAGE(agree_digits(v, exact_magnetic_assembly(beta, ctx), 50), "beta = " << b);
      CHECK_MESSAGE(agree_digits(v, quad_magnetic_oracle(beta, Real("1e-40"), ctx), 35), "beta = " << b);
    }
    CHECK(rounds_to(exact_magnetic(Real(1), ctx), "0.013968847948488614"));
    CHECK_THROWS_AS(exact_magnetic(Real(0), ctx), DomainError);
  }

  TEST_CASE("weak-field limit approaches the series") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    const Real beta("0.001");
    CHECK(agree_digits(exact_magnetic(beta, ctx), partial_sum_magnetic(beta, 6, ctx), 15));
    CHECK_FALSE(agree_digits(exact_magnetic(beta, ctx), partial_sum_magnetic(beta, 2, ctx), 10));
  }

  TEST_CASE("electric closed form and continuation") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    for (const char* k : {"0.2", "1", "30"}) {
      const Real kappa(k);
      const Complex e = exact_electric(kappa, ctx);
      CHECK(agree_digits(e, exact_electric_assembly(kappa, ctx), 50));
      CHECK(agree_digits(e, continuation_check(kappa, ctx, ContinuationBranch::lower), 50));
      const Complex up = continuation_check(kappa, ctx, ContinuationBranch::upper);
      CHECK_FALSE(agree_digits(e, up, 5));
      CHECK(e.imag().sign() > 0);
    }
    const Complex one = exact_electric(Real(1), ctx);
    CHECK(rounds_to(one.real(), "0.020942969"));
    CHECK(rounds_to(one.imag(), "0.013609598"));
  }

  TEST_CASE("pair production rate is twice the imaginary part") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    const Real kappa("0.5");
    CHECK(agree_digits(pair_production_rate(kappa, ctx), exact_electric(kappa, ctx).imag() * 2L, 55));
  }

  TEST_CASE("strong-field asymptote") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    Real previous(1);
    for (const char* b : {"1e4", "1e8", "1e12", "1e18"}) {
      const Real beta(b);
      const Real rel = abs(exact_magnetic(beta, ctx) / strong_field_asymptote(beta, ctx) - Real(1));
      CHECK(rel < previous);
      previous = rel;
    }
    // The next term is linear in beta, so the ratio only approaches 1 like 1/ln(beta).
    // Its coefficient follows from zeta'(-1, 1/2) = -zeta'(-1)/2 - ln 2/24.
    const Real zeta_prime_m1("-0.16542114370045092921391966024278");
    const Real linear = zeta_prime_m1 * 2L + log(Real(2)) / 6L - Real(1) / 6L;
    for (const char* b : {"1e12", "1e18"}) {
      const Real beta(b);
      const Real gap = (exact_magnetic(beta, ctx) - strong_field_asymptote(beta, ctx)) / beta;
      CHECK(abs(gap - linear) < Real(10) / sqrt(beta));
    }
  }

  TEST_CASE("chi series agrees with the direct formula") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    for (const char* xs : {"0.01", "0.1", "0.24"}) {
      const Real x(xs);
      Real direct;
      {
        ScopedPrecision wide(PrecisionContext::with_precision(200));
        const Real xw(xs);
        direct = xw / sinh(xw) - Real(1) + xw * xw / 6L;
      }
      CHECK_MESSAGE(agree_digits(chi(x, ctx), rounded(direct), 50), "x = " << xs);
    }
    const Complex z(Real("0.1"), Real("0.15"));
    const Complex series = chi(z, ctx);
    ScopedPrecision wide(PrecisionContext::with_precision(200));
    const Complex zw(Real("0.1"), Real("0.15"));
    const Complex direct = zw / sinh(zw) - Complex(1) + zw * zw / Real(6);
    CHECK(agree_digits(series, direct, 50));
  }
}
