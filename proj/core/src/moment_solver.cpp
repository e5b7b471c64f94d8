#include "hefp/moment_solver.hpp"

#include <string>

#include <json.hpp>

#include "hefp/linear_solver.hpp"

namespace hefp {

namespace {

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

template <class T>
T laguerre_sum(const std::vector<Real>& c, const T& z) {
  T prev(1);
  T sum = prev * c[0];
  if (c.size() == 1) return sum;
  T cur = T(1) - z;
  sum += cur * c[1];
  for (size_t k = 1; k + 1 < c.size(); ++k) {
    const long kk = static_cast<long>(k);
    T next = (T(Real(2 * kk + 1)) - z) * cur - prev * Real(kk);
    next /= Real(kk + 1);
    sum += next * c[k + 1];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum;
}

}  // namespace

mpz_class p_entry_exact(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("p_entry: indices must be non-negative");
  // m! / ((k!)^2 (m-k)!) = C(m,k) / k!, and (2n+k+1)! / k! is an integer.
  mpz_class sum = 0;
  mpz_class binom = 1;  // C(m,k)
  mpz_class pow2 = 1;   // (-2)^k
  for (int k = 0; k <= m; ++k) {
    if (k > 0) {
      binom = binom * (m - k + 1) / k;
      pow2 *= -2;
    }
    sum += binom * pow2 * (factorial(2 * n + k + 1) / factorial(k));
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(2 * n + 2));
  return scale * sum;
}

Real p_entry(int n, int m, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return Real(p_entry_exact(n, m));
}

MomentSystem build_system(const SeriesCoefficients& coeffs, int d, const PrecisionContext& ctx) {
  if (d < 0) throw DomainError("build_system: d must be non-negative");
  if (ctx.digits() < d + 1) {
    throw PrecisionRuleError("precision rule: working precision must be at least the number of moments (" +
                             std::to_string(d + 1) + " digits for d = " + std::to_string(d) + "), got " +
                             std::to_string(ctx.digits()));
  }
  if (coeffs.n_max < d + 2) {
    throw DomainError("build_system: coefficients end at n = " + std::to_string(coeffs.n_max) + ", need " +
                      std::to_string(d + 2));
  }
  MomentSystem sys;
  sys.d = d;
  sys.p.reserve(static_cast<size_t>(d + 1) * static_cast<size_t>(d + 1));
  for (int n = 0; n <= d; ++n) {
    for (int m = 0; m <= d; ++m) sys.p.push_back(p_entry_exact(n, m));
    sys.rhs.push_back(coeffs.a_exact[static_cast<size_t>(n) + 2]);
  }
  return sys;
}

Real moment_residual(const MomentSystem& system, const std::vector<Real>& c) {
  const int n = system.d + 1;
  const mpfr_prec_t outer = current_precision_bits();
  Real worst;
  {
    ScopedPrecision wide(outer + 64);
    Real t;
    for (int i = 0; i < n; ++i) {
      Real s;
      for (int j = 0; j < n; ++j) {
        mpfr_mul_z(t.get(), c[j].get(), system.entry(i, j).get_mpz_t(), MPFR_RNDN);
        mpfr_add(s.get(), s.get(), t.get(), MPFR_RNDN);
      }
      mpfr_sub_q(s.get(), s.get(), system.rhs[i].get_mpq_t(), MPFR_RNDN);
      Real rel = abs(s) / abs(Real(system.rhs[i]));
      if (rel > worst) worst = std::move(rel);
    }
  }
  return rounded(worst);
}

MomentSolution solve(const MomentSystem& system, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  const int n = system.d + 1;
  Matrix a(n);
  std::vector<Real> b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Real(system.entry(i, j));
    b.emplace_back(system.rhs[i]);
  }
  const LuFactorization f = lu_factor(a, ctx.working_digits());
  std::vector<Real> c = lu_solve(f, b);

  // One refinement pass against the exact matrix.
  {
    std::vector<Real> r;
    {
      ScopedPrecision wide(ctx.bits() + 64);
      Real t;
      for (int i = 0; i < n; ++i) {
        Real s(system.rhs[i]);
        for (int j = 0; j < n; ++j) {
          mpfr_mul_z(t.get(), c[j].get(), system.entry(i, j).get_mpz_t(), MPFR_RNDN);
          mpfr_sub(s.get(), s.get(), t.get(), MPFR_RNDN);
        }
        r.push_back(std::move(s));
      }
    }
    for (Real& v : r) v = rounded(v);
    const std::vector<Real> dc = lu_solve(f, r);
    for (int i = 0; i < n; ++i) c[i] += dc[i];
  }

  MomentSolution sol;
  sol.d = system.d;
  sol.digits_used = ctx.digits();
  sol.guard_digits = ctx.guard_digits();
  sol.residual = moment_residual(system, c);
  for (const Real& v : c) require_finite(v, "moment coefficient");
  sol.c = std::move(c);
  return sol;
}

Complex g_eval(const MomentSolution& sol, const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return exp(z * Real(mpq_class(-1, 2))) * laguerre_sum(sol.c, z);
}

Real g_eval(const MomentSolution& sol, const Real& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return exp(z / -2L) * laguerre_sum(sol.c, z);
}

Complex rho_eval(const MomentSolution& sol, const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return z * g_eval(sol, z, ctx);
}

Real rho_eval(const MomentSolution& sol, const Real& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return z * g_eval(sol, z, ctx);
}

std::string to_json(const MomentSolution& sol) {
  nlohmann::ordered_json j;
  j["schema"] = kMomentSolutionSchema;
  j["kind"] = "moment_solution";
  j["d"] = sol.d;
  j["digits_used"] = sol.digits_used;
  j["guard_digits"] = sol.guard_digits;
  j["generator_version"] = sol.generator_version;
  j["residual"] = to_string(sol.residual, 6);
  auto& arr = j["c"] = nlohmann::ordered_json::array();
  for (const Real& v : sol.c) arr.push_back(to_exact_string(v));
  return j.dump(1) + "\n";
}

MomentSolution moment_solution_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("moment solution: malformed JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != kMomentSolutionSchema) throw IoError("moment solution: unsupported schema");
    MomentSolution sol;
    sol.d = j.at("d").get<int>();
    sol.digits_used = j.at("digits_used").get<int>();
    sol.guard_digits = j.at("guard_digits").get<int>();
    sol.generator_version = j.at("generator_version").get<int>();
    const PrecisionContext ctx = sol.context();
    ScopedPrecision scope(ctx);
    sol.residual = Real(j.at("residual").get<std::string>());
    for (const auto& v : j.at("c")) sol.c.emplace_back(v.get<std::string>());
    if (static_cast<int>(sol.c.size()) != sol.d + 1) throw IoError("moment solution: expected d+1 coefficients");
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("moment solution: ") + e.what());
  } catch (const DomainError& e) {
    throw IoError(std::string("moment solution: ") + e.what());
  } catch (const ConfigurationError& e) {
    throw IoError(std::string("moment solution: ") + e.what());
  }
}

}  // namespace hefp
