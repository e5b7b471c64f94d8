#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "output.hpp"

namespace hefp::cli {

enum class Field { magnetic, electric };

/// One requested field strength, kept as the user's decimal string.
struct FieldValue {
  Field field;
  std::string text;
};

/// Raised when a long-running job is requested without --allow-long.
class LongJobRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableOptions {
  int id = 1;
  bool full = false;
  bool allow_long = false;
  std::optional<std::filesystem::path> cache_dir;
};

OutputTable cmd_coeffs(int n_max, int digits, int print_digits);
OutputTable cmd_exact(const std::vector<FieldValue>& values, int digits, int print_digits);
OutputTable cmd_solve(int d, int digits, const std::filesystem::path& cache_dir,
                      const std::optional<std::filesystem::path>& output);
OutputTable cmd_extrapolate(const std::vector<FieldValue>& values, const std::filesystem::path& solution_file,
                            std::optional<int> K, int print_digits);
OutputTable cmd_pade(int N, int M, const std::vector<FieldValue>& values, int digits, int print_digits);
/// `order` overrides the order implied by the label n.
OutputTable cmd_delta(int n, std::optional<int> order, const std::vector<FieldValue>& values, int digits,
                      int print_digits);
OutputTable cmd_table(const TableOptions& options);

/// Rough wall-clock estimate in seconds for a moment solve of size d at `digits`.
double estimate_solve_seconds(int d, int digits);

}  // namespace hefp::cli
