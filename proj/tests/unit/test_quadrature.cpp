#include <doctest.h>

#include "hefp/errors.hpp"
#include "hefp/quadrature.hpp"

using namespace hefp;

TEST_SUITE("quadrature") {
  TEST_CASE("tanh-sinh on smooth and endpoint-singular integrands") {
    ScopedPrecision s(PrecisionContext::with_precision(40));
    QuadratureOptions opt;
    opt.target_digits = 50;
    const auto r1 = tanh_sinh([](const Real& x) { return sqrt(x); }, Real(0), Real(1), opt);
    CHECK(agree_digits(r1.value, Real(2) / 3L, 48));
    const auto r2 = tanh_sinh([](const Real& x) { return Real(1) / sqrt(x); }, Real(0), Real(1), opt);
    CHECK(agree_digits(r2.value, Real(2), 48));
    const auto r3 = tanh_sinh([](const Real& x) { return log(x); }, Real(0), Real(1), opt);
    CHECK(agree_digits(r3.value, Real(-1), 48));
  }

  TEST_CASE("exp-sinh on half-line integrands") {
    ScopedPrecision s(PrecisionContext::with_precision(40));
    QuadratureOptions opt;
    opt.target_digits = 50;
    const auto r1 = exp_sinh([](const Real& x) { return exp(-x); }, Real(0), opt);
    CHECK(agree_digits(r1.value, Real(1), 48));
    const auto r2 = exp_sinh([](const Real& x) { return exp(-x) / x; }, Real(1), opt);
    // E_1(1)
    CHECK(rounds_to(r2.value, "0.21938393439552027367716377546012"));
  }

  TEST_CASE("non-convergence is reported") {
    ScopedPrecision s(PrecisionContext::with_precision(40));
    QuadratureOptions opt;
    opt.target_digits = 50;
    opt.max_level = 3;
    CHECK_THROWS_AS(tanh_sinh([](const Real& x) { return sin(Real(1) / x); }, Real(0), Real(1), opt),
                    NumericalError);
  }
}
