#include <doctest.h>

#include "hefp/comparators.hpp"
#include "hefp/errors.hpp"
#include "hefp/heisenberg_euler.hpp"
#include "hefp/quadrature.hpp"

using namespace hefp;

TEST_SUITE("comparators") {
  TEST_CASE("Padé reproduces its input series") {
    const auto ctx = PrecisionContext::with_precision(80);
    ScopedPrecision s(ctx);
    const auto coeffs = weak_field_coeffs(30, ctx);
    const int N = 12, M = 14;
    const auto pa = pade_build(coeffs, N, M, ctx);
    REQUIRE(pa.q[0] == Real(1));
    // Series of p/q: r_i = p_i - sum_{j=1}^{min(i,M)} q_j r_{i-j}
    std::vector<Real> r;
    for (int i = 0; i <= N + M; ++i) {
      Real v = i <= N ? pa.p[i] : Real(0);
      for (int j = 1; j <= std::min(i, M); ++j) v -= pa.q[j] * r[i - j];
      r.push_back(v);
      Real want(coeffs.a_exact[i + 2]);
      if (i % 2 == 1) want = -want;
      CHECK_MESSAGE(agree_digits(v, want, 60), "i = " << i);
    }
  }

  TEST_CASE("zeroth approximant") {
    const auto ctx = PrecisionContext::with_precision(30);
    ScopedPrecision s(ctx);
    const auto pa = pade_build(weak_field_coeffs(2, ctx), 0, 0, ctx);
    CHECK(pa.p[0] == Real(mpq_class(7, 360)));
    CHECK(agree_digits(pade_eval(pa, Real(3), ctx), Real(mpq_class(7, 40)), 45));
  }

  TEST_CASE("geometric series") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    for (const char* rs : {"0.5", "-0.9", "-2"}) {
      const Real r(rs);
      std::vector<Real> b{Real(1), r};
      const auto pa = pade_from_series(b, 0, 1, ctx);
      CHECK(agree_digits(pade_eval_reduced(pa, Real(1), ctx), Real(1) / (Real(1) - r), 55));
      std::vector<Real> terms{Real(1), r, r * r};
      CHECK(agree_digits(delta_transform(terms, 1, ctx), Real(1) / (Real(1) - r), 55));
    }
  }

  TEST_CASE("delta sums the Euler series") {
    // sum (-1)^k k! x^k is the asymptotic series of int e^-t / (1 + x t) dt
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    const Real x("0.1");
    std::vector<Real> terms;
    Real t(1);
    for (int k = 0; k <= 40; ++k) {
      if (k > 0) t *= -x * Real(k);
      terms.push_back(t);
    }
    QuadratureOptions opt;
    opt.target_digits = 40;
    const Real oracle = exp_sinh([&](const Real& u) { return exp(-u) / (Real(1) + x * u); }, Real(0), opt).value;
    CHECK(agree_digits(delta_transform(terms, 30, ctx), oracle, 25));
  }

  TEST_CASE("Padé table cells") {
    const auto ctx = PrecisionContext::with_precision(150);
    ScopedPrecision s(ctx);
    const auto coeffs = weak_field_coeffs(205, ctx);
    const auto p50 = pade_build(coeffs, 49, 50, ctx);
    CHECK(matches_printed(pade_eval(p50, Real(1), ctx), "0.0139668760758"));
    CHECK(matches_printed(pade_eval(p50, Real("1e7"), ctx), "1.0723e6"));
    CHECK(matches_printed(pade_eval(p50, -Real(1), ctx), "0.034964576"));

    const auto wide = PrecisionContext::with_precision(300);
    ScopedPrecision w(wide);
    const auto p100 = pade_build(weak_field_coeffs(205, wide), 99, 100, wide);
    const Real v = pade_eval(p100, Real("0.1"), wide);
    CHECK(matches_printed(v, "1.83994677220361577e-4"));
    CHECK(matches_printed(pade_eval(p100, Real("0.2"), wide), "7.03568260367885e-4"));
  }

  TEST_CASE("delta table cells") {
    const auto ctx = PrecisionContext::with_precision(120);
    ScopedPrecision s(ctx);
    const auto coeffs = weak_field_coeffs(110, ctx);
    CHECK(matches_printed(weniger_delta(coeffs, 100, Real(-1), ctx), "0.0139688479485"));
    CHECK(matches_printed(weniger_delta(coeffs, 100, -Real("1e7"), ctx), "1.1943e7"));
    CHECK(matches_printed(weniger_delta(coeffs, 50, Real(1), ctx), "0.029247263"));
    CHECK(matches_printed(weniger_delta(coeffs, 50, Real("0.2"), ctx), "1.0248313456e-3"));
    CHECK(matches_printed(weniger_delta(coeffs, 50, Real("1e3"), ctx), "-9595.11"));
    // The delta_25 cells correspond to one order higher than the other rows.
    CHECK(matches_printed(weniger_delta_at_order(coeffs, 24, -Real("0.1"), ctx), "1.83994677220367065e-4"));
    CHECK(matches_printed(weniger_delta_at_order(coeffs, 24, -Real("0.2"), ctx), "7.03568260484163e-4"));
  }

  TEST_CASE("delta_25 by label to all printed digits" * doctest::may_fail()) {
    const auto ctx = PrecisionContext::with_precision(120);
    ScopedPrecision s(ctx);
    const auto coeffs = weak_field_coeffs(40, ctx);
    CHECK(matches_printed(weniger_delta(coeffs, 25, -Real("0.1"), ctx), "1.83994677220367065e-4"));
  }

  TEST_CASE("comparators are stable under more precision") {
    std::string a, b;
    for (int digits : {150, 250}) {
      const auto ctx = PrecisionContext::with_precision(digits);
      ScopedPrecision s(ctx);
      const auto coeffs = weak_field_coeffs(110, ctx);
      const Real p = pade_eval(pade_build(coeffs, 49, 50, ctx), Real(4), ctx);
      const Real d = weniger_delta(coeffs, 100, Real(-4), ctx);
      (digits == 150 ? a : b) = to_string(p, 40) + " " + to_string(d, 40);
    }
    CHECK(a == b);
  }

  TEST_CASE("failure modes") {
    const auto ctx = PrecisionContext::with_precision(40);
    ScopedPrecision s(ctx);
    std::vector<Real> zeros(5);
    zeros[0] = Real(1);
    CHECK_THROWS_AS(pade_from_series(zeros, 1, 2, ctx), NumericalError);
    const auto pole = pade_from_series({Real(1), Real(1)}, 0, 1, ctx);
    CHECK_THROWS_AS(pade_eval_reduced(pole, Real(1), ctx), NumericalError);
    CHECK_THROWS_AS(pade_from_series({Real(1)}, 1, 1, ctx), DomainError);
    CHECK_THROWS_AS(delta_transform({Real(1), Real(0), Real(1)}, 1, ctx), NumericalError);
    CHECK_THROWS_AS(pade_build(weak_field_coeffs(60, ctx), 25, 25, ctx), PrecisionRuleError);
  }
}
