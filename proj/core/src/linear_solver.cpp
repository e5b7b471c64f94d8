#include "hefp/linear_solver.hpp"

#include <string>
#include <utility>

namespace hefp {

LuFactorization lu_factor(Matrix a, int pivot_digits) {
  const int n = a.n;
  LuFactorization f;
  f.perm.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) f.perm[i] = i;

  // Singularity is judged against the size of the pivot's original row, so
  // rows of very different magnitude do not mask each other.
  const Real eps = pow10(-pivot_digits);
  std::vector<Real> row_scale(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (abs(a(i, j)) > row_scale[i]) row_scale[i] = abs(a(i, j));
    }
  }

  Real t;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i) {
      if (mpfr_cmpabs(a(i, k).get(), a(p, k).get()) > 0) p = i;
    }
    if (a(p, k).is_zero() || abs(a(p, k)) <= eps * row_scale[f.perm[p]]) {
      throw NumericalError("LU: numerically singular pivot at index " + std::to_string(k));
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(f.perm[k], f.perm[p]);
    }
    for (int i = k + 1; i < n; ++i) {
      Real& l = a(i, k);
      mpfr_div(l.get(), l.get(), a(k, k).get(), MPFR_RNDN);
      if (l.is_zero()) continue;
      for (int j = k + 1; j < n; ++j) {
        mpfr_mul(t.get(), l.get(), a(k, j).get(), MPFR_RNDN);
        mpfr_sub(a(i, j).get(), a(i, j).get(), t.get(), MPFR_RNDN);
      }
    }
  }
  f.lu = std::move(a);
  return f;
}

std::vector<Real> lu_solve(const LuFactorization& f, const std::vector<Real>& b) {
  const int n = f.lu.n;
  if (static_cast<int>(b.size()) != n) throw DomainError("LU solve: right-hand side has wrong length");
  std::vector<Real> x(static_cast<size_t>(n));
  Real t;
  for (int i = 0; i < n; ++i) {
    x[i] = rounded(b[f.perm[i]]);
    for (int j = 0; j < i; ++j) {
      mpfr_mul(t.get(), f.lu(i, j).get(), x[j].get(), MPFR_RNDN);
      mpfr_sub(x[i].get(), x[i].get(), t.get(), MPFR_RNDN);
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      mpfr_mul(t.get(), f.lu(i, j).get(), x[j].get(), MPFR_RNDN);
      mpfr_sub(x[i].get(), x[i].get(), t.get(), MPFR_RNDN);
    }
    mpfr_div(x[i].get(), x[i].get(), f.lu(i, i).get(), MPFR_RNDN);
  }
  return x;
}

std::vector<Real> residual(const Matrix& a, const std::vector<Real>& x, const std::vector<Real>& b) {
  const int n = a.n;
  std::vector<Real> r;
  r.reserve(static_cast<size_t>(n));
  const mpfr_prec_t outer = current_precision_bits();
  ScopedPrecision wide(outer + 64);
  Real t;
  for (int i = 0; i < n; ++i) {
    Real s = rounded(b[i]);
    for (int j = 0; j < n; ++j) {
      mpfr_mul(t.get(), a(i, j).get(), x[j].get(), MPFR_RNDN);
      mpfr_sub(s.get(), s.get(), t.get(), MPFR_RNDN);
    }
    r.push_back(std::move(s));
  }
  ScopedPrecision back(outer);
  for (Real& v : r) v = rounded(v);
  return r;
}

std::vector<Real> solve_linear(const Matrix& a, const std::vector<Real>& b, int pivot_digits, int refinement_passes) {
  const LuFactorization f = lu_factor(a, pivot_digits);
  std::vector<Real> x = lu_solve(f, b);
  for (int pass = 0; pass < refinement_passes; ++pass) {
    const std::vector<Real> dx = lu_solve(f, residual(a, x, b));
    for (size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
  }
  return x;
}

}  // namespace hefp
