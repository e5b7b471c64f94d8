#pragma once

#include <vector>

#include "hefp/precision.hpp"

namespace hefp {

/// Dense row-major square matrix of Reals.
struct Matrix {
  int n = 0;
  std::vector<Real> data;

  Matrix() = default;
  explicit Matrix(int size) : n(size), data(static_cast<size_t>(size) * static_cast<size_t>(size)) {}

  Real& operator()(int i, int j) { return data[static_cast<size_t>(i) * n + j]; }
  const Real& operator()(int i, int j) const { return data[static_cast<size_t>(i) * n + j]; }
};

/// PA = LU with unit-diagonal L stored below the diagonal.
struct LuFactorization {
  Matrix lu;
  std::vector<int> perm;  // row i of PA is row perm[i] of A
};

/// Gaussian elimination with partial pivoting at the current precision.
/// A pivot with |p| <= 10^-pivot_digits times the largest entry of its original
/// row raises NumericalError naming the pivot index.
LuFactorization lu_factor(Matrix a, int pivot_digits);

std::vector<Real> lu_solve(const LuFactorization& f, const std::vector<Real>& b);

/// Residual b - A x accumulated with 64 extra bits.
std::vector<Real> residual(const Matrix& a, const std::vector<Real>& x, const std::vector<Real>& b);

/// LU solve followed by `refinement_passes` residual re-solves.
std::vector<Real> solve_linear(const Matrix& a, const std::vector<Real>& b, int pivot_digits,
                               int refinement_passes = 1);

}  // namespace hefp
