#pragma once

// Laguerre reconstruction rho(x) = x e^(-x/2) sum_m c_m L_m(x) from the
// positive moments  int x^(2n) rho(x) dx = a_{n+2},  n = 0..d.

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hefp/heisenberg_euler.hpp"
#include "hefp/precision.hpp"

namespace hefp {

inline constexpr int kMomentSolutionSchema = 1;

struct MomentSystem {
  int d = 0;
  std::vector<mpz_class> p;    // row-major (d+1) x (d+1), exact
  std::vector<mpq_class> rhs;  // a_{n+2}, exact

  const mpz_class& entry(int n, int m) const { return p[static_cast<size_t>(n) * (d + 1) + m]; }
};

struct MomentSolution {
  int d = 0;
  int digits_used = 0;
  int guard_digits = 0;
  int generator_version = kCoefficientGeneratorVersion;
  std::vector<Real> c;
  Real residual;  // max_n |(P c)_n - a_{n+2}| / a_{n+2}

  PrecisionContext context() const { return PrecisionContext::with_precision(digits_used, guard_digits); }
};

/// P(n,m) = m! 2^(2n+2) sum_k (-2)^k (2n+k+1)! / ((k!)^2 (m-k)!), exactly.
mpz_class p_entry_exact(int n, int m);
Real p_entry(int n, int m, const PrecisionContext& ctx);

/// Throws PrecisionRuleError unless ctx.digits() >= d + 1, and DomainError
/// if `coeffs` stops before a_{d+2}.
MomentSystem build_system(const SeriesCoefficients& coeffs, int d, const PrecisionContext& ctx);

/// LU with partial pivoting, one refinement pass, relative residual recorded.
MomentSolution solve(const MomentSystem& system, const PrecisionContext& ctx);

/// Relative moment residual of arbitrary coefficients c against the system.
Real moment_residual(const MomentSystem& system, const std::vector<Real>& c);

/// g(z) = e^(-z/2) sum_m c_m L_m(z).
Complex g_eval(const MomentSolution& sol, const Complex& z, const PrecisionContext& ctx);
Real g_eval(const MomentSolution& sol, const Real& z, const PrecisionContext& ctx);

/// rho(z) = z g(z).
Complex rho_eval(const MomentSolution& sol, const Complex& z, const PrecisionContext& ctx);
Real rho_eval(const MomentSolution& sol, const Real& z, const PrecisionContext& ctx);

/// Versioned JSON document; c is written with enough digits to reload bit-exactly.
std::string to_json(const MomentSolution& sol);
/// Throws IoError on malformed input or an unknown schema.
MomentSolution moment_solution_from_json(std::string_view text);

}  // namespace hefp
