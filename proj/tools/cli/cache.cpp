#include "cache.hpp"

#include <unistd.h>

#include <fstream>
#include <sstream>

#include "hefp/errors.hpp"
#include "hefp/heisenberg_euler.hpp"

namespace hefp::cli {

std::filesystem::path SolutionCache::path_for(int d, int digits) const {
  return dir_ / ("moments_d" + std::to_string(d) + "_digits" + std::to_string(digits) + "_gen" +
                 std::to_string(kCoefficientGeneratorVersion) + ".json");
}

MomentSolution SolutionCache::load_or_solve(int d, int digits, bool* fresh) const {
  const auto file = path_for(d, digits);
  if (std::filesystem::exists(file)) {
    MomentSolution sol = load_solution(file);
    if (sol.d == d && sol.digits_used == digits && sol.generator_version == kCoefficientGeneratorVersion) {
      if (fresh) *fresh = false;
      return sol;
    }
  }
  MomentSolution sol = solve_moments(d, digits);
  write_solution(sol, file);
  if (fresh) *fresh = true;
  return sol;
}

MomentSolution solve_moments(int d, int digits) {
  if (digits < d + 1) {
    throw PrecisionRuleError("precision rule: --digits must be at least the number of moments (" +
                             std::to_string(d + 1) + "), got " + std::to_string(digits));
  }
  const PrecisionContext ctx = PrecisionContext::with_precision(digits);
  const SeriesCoefficients coeffs = weak_field_coeffs(d + 2, ctx);
  return solve(build_system(coeffs, d, ctx), ctx);
}

MomentSolution load_solution(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open solution file " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return moment_solution_from_json(ss.str());
}

void write_solution(const MomentSolution& sol, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = std::filesystem::path(file.string() + "." + std::to_string(::getpid()) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << to_json(sol);
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace hefp::cli
