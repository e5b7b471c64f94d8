#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cache.hpp"
#include "commands.hpp"
#include "hefp/errors.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitPrecisionRule = 3;
constexpr int kExitNumerical = 4;

using hefp::cli::Field;
using hefp::cli::FieldValue;

std::vector<FieldValue> collect(const std::vector<std::string>& betas, const std::vector<std::string>& kappas) {
  std::vector<FieldValue> out;
  for (const auto& b : betas) out.push_back({Field::magnetic, b});
  for (const auto& k : kappas) out.push_back({Field::electric, k});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heisenberg-Euler finite-part resummation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  hefp::cli::Format format = hefp::cli::Format::csv;
  const std::map<std::string, hefp::cli::Format> formats{
      {"csv", hefp::cli::Format::csv}, {"json", hefp::cli::Format::json}, {"pretty", hefp::cli::Format::pretty}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();

  int digits = 40;
  int print_digits = 0;
  int moments = 100;
  std::optional<int> terms;
  std::vector<std::string> betas, kappas;
  std::string cache_dir = "hefp-cache";
  std::string output_file, solution_file;
  bool allow_long = false;

  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--digits", digits, "Working precision in decimal digits")->check(CLI::Range(30, 100000));
    sub->add_option("--print-digits", print_digits, "Significant digits printed (default: --digits)");
  };
  auto add_fields = [&](CLI::App* sub) {
    sub->add_option("--beta", betas, "Magnetic field strength (repeatable)")->allow_extra_args(false);
    sub->add_option("--kappa", kappas, "Electric field strength (repeatable)")->allow_extra_args(false);
  };

  int n_max = 10;
  auto* coeffs = app.add_subcommand("coeffs", "Weak-field series coefficients a_n");
  coeffs->add_option("--n-max", n_max, "Largest n")->required();
  add_precision(coeffs);

  auto* exact = app.add_subcommand("exact", "Closed-form values");
  add_precision(exact);
  add_fields(exact);

  auto* solve = app.add_subcommand("solve", "Solve the moment system and store the solution");
  solve->add_option("--moments", moments, "Number of moments d+1")->required()->check(CLI::PositiveNumber);
  solve->add_option("--digits", digits, "Working precision in decimal digits")->required();
  solve->add_option("--cache", cache_dir, "Cache directory")->capture_default_str();
  solve->add_option("--output", output_file, "Write to this file instead of the cache");

  auto* extrap = app.add_subcommand("extrapolate", "Evaluate the convergent extrapolant");
  extrap->add_option("--solution", solution_file, "Solution file written by 'solve'");
  extrap->add_option("--moments", moments, "Use the cached solution with this many moments");
  extrap->add_option("--digits", digits, "Precision of the cached solution");
  extrap->add_option("--cache", cache_dir, "Cache directory")->capture_default_str();
  extrap->add_option("--terms", terms, "Tail terms K (default 2d)")->check(CLI::NonNegativeNumber);
  extrap->add_option("--print-digits", print_digits, "Significant digits printed");
  add_fields(extrap);

  int N = 49, M = 50;
  auto* pade = app.add_subcommand("pade", "Padé approximant of the weak-field series");
  pade->add_option("-N", N, "Numerator degree")->capture_default_str();
  pade->add_option("-M", M, "Denominator degree")->capture_default_str();
  add_precision(pade);
  add_fields(pade);

  int delta_n = 100;
  auto* delta = app.add_subcommand("delta", "Weniger delta transformation");
  std::optional<int> delta_order;
  delta->add_option("-n", delta_n, "Table label n")->capture_default_str();
  delta->add_option("--order", delta_order, "Explicit transformation order (overrides -n)")->check(CLI::PositiveNumber);
  add_precision(delta);
  add_fields(delta);

  hefp::cli::TableOptions topt;
  std::string scale = "desk";
  auto* table = app.add_subcommand("table", "Regenerate one of the convergence tables");
  table->add_option("id", topt.id, "Table number")->required()->check(CLI::Range(1, 4));
  table->add_option("--scale", scale, "desk or full")->check(CLI::IsMember({"desk", "full"}))->capture_default_str();
  table->add_flag("--allow-long", allow_long, "Permit full-scale jobs");
  auto* cache_opt = table->add_option("--cache", cache_dir, "Reuse and store moment solutions here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  if (print_digits <= 0) print_digits = std::min(digits, 60);

  try {
    hefp::cli::OutputTable out;
    const auto values = collect(betas, kappas);
    if (*coeffs) {
      out = hefp::cli::cmd_coeffs(n_max, digits, print_digits);
    } else if (*exact) {
      out = hefp::cli::cmd_exact(values, digits, print_digits);
    } else if (*solve) {
      out = hefp::cli::cmd_solve(moments - 1, digits, cache_dir,
                                 output_file.empty() ? std::nullopt : std::optional<std::filesystem::path>(output_file));
    } else if (*extrap) {
      std::filesystem::path file = solution_file;
      if (file.empty()) {
        if (extrap->count("--moments") == 0 || extrap->count("--digits") == 0) {
          std::cerr << "extrapolate: give --solution FILE or both --moments and --digits\n";
          return kExitUsage;
        }
        hefp::cli::SolutionCache cache(cache_dir);
        file = cache.path_for(moments - 1, digits);
        cache.load_or_solve(moments - 1, digits);
      }
      out = hefp::cli::cmd_extrapolate(values, file, terms, print_digits);
    } else if (*pade) {
      out = hefp::cli::cmd_pade(N, M, values, digits, print_digits);
    } else if (*delta) {
      out = hefp::cli::cmd_delta(delta_n, delta_order, values, digits, print_digits);
    } else if (*table) {
      topt.full = scale == "full";
      topt.allow_long = allow_long;
      if (cache_opt->count() > 0) topt.cache_dir = cache_dir;
      out = hefp::cli::cmd_table(topt);
    }
    std::cout << hefp::cli::render(out, format);
    if (format != hefp::cli::Format::json) {
      for (const auto& n : out.notes) std::cerr << "note: " << n << '\n';
    }
    return 0;
  } catch (const hefp::cli::LongJobRefused& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const hefp::PrecisionRuleError& e) {
    std::cerr << "precision rule violated: " << e.what() << '\n';
    return kExitPrecisionRule;
  } catch (const hefp::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hefp::ConfigurationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hefp::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const hefp::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
