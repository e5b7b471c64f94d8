#pragma once

#include <filesystem>

#include "hefp/moment_solver.hpp"

namespace hefp::cli {

/// Moment solutions on disk, keyed by (d, digits, coefficient generator version).
class SolutionCache {
 public:
  explicit SolutionCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(int d, int digits) const;

  /// Loads the cached solution or solves and stores it. `fresh` reports which.
  MomentSolution load_or_solve(int d, int digits, bool* fresh = nullptr) const;

 private:
  std::filesystem::path dir_;
};

MomentSolution solve_moments(int d, int digits);
MomentSolution load_solution(const std::filesystem::path& file);
void write_solution(const MomentSolution& sol, const std::filesystem::path& file);

}  // namespace hefp::cli
