#include <doctest.h>

#include "hefp/errors.hpp"
#include "hefp/heisenberg_euler.hpp"
#include "hefp/moment_solver.hpp"

using namespace hefp;

namespace {

// int x^(2n) * x e^(-x/2) L_m(x) dx, expanding L_m in monomials.
mpq_class monomial_moment(int n, int m) {
  mpq_class sum = 0;
  mpz_class binom = 1, fact = 1;
  for (int j = 0; j <= m; ++j) {
    if (j > 0) {
      binom = binom * (m - j + 1) / j;
      fact *= j;
    }
    const int p = 2 * n + 1 + j;
    mpz_class pf, pw;
    mpz_fac_ui(pf.get_mpz_t(), static_cast<unsigned long>(p));
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(p + 1));
    mpq_class term(binom * pf * pw, fact);
    term.canonicalize();
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

MomentSolution small_solution(int d, int digits) {
  const auto ctx = PrecisionContext::with_precision(digits);
  return solve(build_system(weak_field_coeffs(d + 2, ctx), d, ctx), ctx);
}

}  // namespace

TEST_SUITE("moment_solver") {
  TEST_CASE("matrix entries equal the monomial moments") {
    for (int n = 0; n <= 10; ++n) {
      for (int m = 0; m <= 10; ++m) {
        CHECK_MESSAGE(mpq_class(p_entry_exact(n, m)) == monomial_moment(n, m), "n = " << n << ", m = " << m);
      }
    }
    CHECK_THROWS_AS(p_entry_exact(-1, 0), DomainError);
  }

  TEST_CASE("one moment") {
    const auto sol = small_solution(0, 30);
    ScopedPrecision s(sol.context());
    CHECK(agree_digits(sol.c[0], Real(mpq_class(7, 1440)), 45));
    CHECK(rounds_to(sol.c[0], "4.8611e-3"));
  }

  TEST_CASE("precision rule") {
    const auto ctx = PrecisionContext::with_precision(30);
    const auto coeffs = weak_field_coeffs(45, ctx);
    CHECK_THROWS_AS(build_system(coeffs, 40, ctx), PrecisionRuleError);
    CHECK_NOTHROW(build_system(coeffs, 29, ctx));
    CHECK_THROWS_AS(build_system(weak_field_coeffs(10, ctx), 20, ctx), DomainError);
  }

  TEST_CASE("moments of the reconstructed density") {
    const int d = 12;
    const auto sol = small_solution(d, 40);
    const auto ctx = sol.context();
    ScopedPrecision s(ctx);
    const auto coeffs = weak_field_coeffs(d + 2, ctx);
    for (int n = 0; n <= d; ++n) {
      Real mu;
      for (int m = 0; m <= d; ++m) mu += sol.c[m] * Real(monomial_moment(n, m));
      const Real want(coeffs.a_exact[n + 2]);
      CHECK_MESSAGE(abs(mu - want) / want <= sol.residual * 10L + pow10(-ctx.digits()), "n = " << n);
    }
    CHECK(sol.residual < Real("1e-30"));
  }

  TEST_CASE("solutions are stable under more precision") {
    const auto a = small_solution(20, 41);
    const auto b = small_solution(20, 91);
    ScopedPrecision s(a.context());
    for (int m = 0; m <= 20; ++m) CHECK(agree_digits(a.c[m], b.c[m], 20));
  }

  TEST_CASE("density evaluation") {
    const auto sol = small_solution(10, 40);
    const auto ctx = sol.context();
    ScopedPrecision s(ctx);
    CHECK(rho_eval(sol, Real(0), ctx).is_zero());
    const Complex z = rho_eval(sol, Complex(Real("0.7")), ctx);
    CHECK(z.imag().is_zero());
    CHECK(agree_digits(z.real(), rho_eval(sol, Real("0.7"), ctx), 55));
    const Complex w(Real("0.3"), Real("0.9"));
    CHECK(agree_digits(rho_eval(sol, conj(w), ctx), conj(rho_eval(sol, w, ctx)), 55));
  }

  TEST_CASE("serialization round-trips exactly") {
    const auto sol = small_solution(15, 40);
    const std::string text = to_json(sol);
    const auto back = moment_solution_from_json(text);
    CHECK(to_json(back) == text);
    CHECK(back.d == 15);
    ScopedPrecision s(back.context());
    for (int m = 0; m <= 15; ++m) CHECK(back.c[m] == sol.c[m]);
    CHECK(text.find("\"schema\": 1") != std::string::npos);
  }

  TEST_CASE("solves are deterministic") {
    CHECK(to_json(small_solution(18, 40)) == to_json(small_solution(18, 40)));
  }

  TEST_CASE("corrupt documents") {
    CHECK_THROWS_AS(moment_solution_from_json("{"), IoError);
    CHECK_THROWS_AS(moment_solution_from_json("{\"schema\": 2}"), IoError);
    CHECK_THROWS_AS(moment_solution_from_json(
                        "{\"schema\":1,\"d\":1,\"digits_used\":40,\"guard_digits\":20,\"generator_version\":1,"
                        "\"residual\":\"0\",\"c\":[\"1\"]}"),
                    IoError);
    CHECK_THROWS_AS(moment_solution_from_json(
                        "{\"schema\":1,\"d\":0,\"digits_used\":40,\"guard_digits\":20,\"generator_version\":1,"
                        "\"residual\":\"0\",\"c\":[\"x\"]}"),
                    IoError);
  }
}
