#include "commands.hpp"

#include <cmath>
#include <cstdio>

#include "cache.hpp"
#include "hefp/comparators.hpp"
#include "hefp/errors.hpp"
#include "hefp/extrapolant.hpp"
#include "hefp/heisenberg_euler.hpp"

namespace hefp::cli {

namespace {

const char* field_name(Field f) { return f == Field::magnetic ? "magnetic" : "electric"; }

Real parse_positive(const FieldValue& v) {
  Real x(v.text);
  if (x.sign() <= 0) {
    throw DomainError(std::string(v.field == Field::magnetic ? "beta" : "kappa") + " must be positive, got " + v.text);
  }
  return x;
}

void require_values(const std::vector<FieldValue>& values) {
  if (values.empty()) throw DomainError("no field values given; use --beta and/or --kappa");
}

// Digits needed before a comparator is trusted.
int pade_digits(int N, int M) { return std::max(120, 3 * (N + M) / 2 + 2); }
int delta_digits(int n) { return std::max(120, n + 40); }

std::string format_seconds(double s) {
  char buf[64];
  if (s < 120) std::snprintf(buf, sizeof buf, "%.0f s", s);
  else if (s < 7200) std::snprintf(buf, sizeof buf, "%.0f min", s / 60);
  else if (s < 3 * 86400) std::snprintf(buf, sizeof buf, "%.1f h", s / 3600);
  else std::snprintf(buf, sizeof buf, "%.1f days", s / 86400);
  return buf;
}

// ---- table layouts --------------------------------------------------------

enum class RowKind { partial, moments, pade, delta, exact };

struct RowSpec {
  std::string label;
  RowKind kind;
  int a = 0;  // d for partial/moments, N for pade, n for delta
  int b = 0;  // M for pade
  bool full_only = false;
};

struct TableLayout {
  Field field;
  std::vector<std::string> columns;
  std::vector<RowSpec> rows;
};

RowSpec moments_row(int count, bool full_only = false) {
  return {std::to_string(count), RowKind::moments, count - 1, 0, full_only};
}

TableLayout layout_for(int id) {
  switch (id) {
    case 1:
      return {Field::magnetic,
              {"1e-2", "0.1", "0.2"},
              {{"1", RowKind::partial, 1},
               {"5", RowKind::partial, 5},
               {"9", RowKind::partial, 9},
               {"20", RowKind::partial, 20},
               {"50", RowKind::partial, 50},
               {"Exact", RowKind::exact}}};
    case 2:
      return {Field::magnetic,
              {"1", "4", "1e2", "1e3", "1e4", "1e7", "1e12", "1e13", "1e18", "0.1", "0.2"},
              {moments_row(50), moments_row(100), moments_row(500, true), moments_row(1000, true),
               moments_row(1500, true), moments_row(2000, true), moments_row(2500, true),
               {"P[999/1000]", RowKind::pade, 999, 1000, true},
               {"P[49/50]", RowKind::pade, 49, 50},
               {"P[99/100]", RowKind::pade, 99, 100},
               {"delta_499", RowKind::delta, 499, 0, true},
               {"delta_100", RowKind::delta, 100},
               {"delta_25", RowKind::delta, 25},
               {"Exact", RowKind::exact}}};
    case 3:
    case 4: {
      TableLayout t{Field::electric, {}, {}};
      t.columns = id == 3 ? std::vector<std::string>{"1", "4", "0.2"}
                          : std::vector<std::string>{"1e8", "1e12", "10", "100", "1e3"};
      t.rows = {moments_row(200), moments_row(500, true), moments_row(1000, true), moments_row(1500, true),
                moments_row(2000, true),
                {"P[999/1000]", RowKind::pade, 999, 1000, true},
                {"P[49/50]", RowKind::pade, 49, 50},
                {"delta_499", RowKind::delta, 499, 0, true},
                {"delta_50", RowKind::delta, 50},
                {"Exact", RowKind::exact}};
      return t;
    }
    default:
      throw DomainError("table id must be 1, 2, 3 or 4");
  }
}

int row_digits(const RowSpec& r) {
  switch (r.kind) {
    case RowKind::partial: return 40;
    case RowKind::moments: return r.a + 1 + 20;
    case RowKind::pade: return pade_digits(r.a, r.b);
    case RowKind::delta: return delta_digits(r.a);
    case RowKind::exact: return 40;
  }
  return 40;
}

double estimate_row_seconds(const RowSpec& r) {
  const int digits = row_digits(r);
  switch (r.kind) {
    case RowKind::moments: return estimate_solve_seconds(r.a, digits);
    case RowKind::pade: {
      const double m = r.b / 100.0;
      return 0.5 * m * m * m * (digits / 300.0);
    }
    case RowKind::delta: return 0.01 * (r.a / 100.0) * (r.a / 100.0) * (digits / 120.0);
    default: return 0.1;
  }
}

// Cell values for one row; electric cells may be complex.
std::vector<Complex> evaluate_row(const RowSpec& r, const TableLayout& t, const TableOptions& opt) {
  const int digits = row_digits(r);
  const PrecisionContext ctx = PrecisionContext::with_precision(digits);
  ScopedPrecision scope(ctx);
  std::vector<Real> xs;
  for (const auto& c : t.columns) xs.emplace_back(c);
  std::vector<Complex> out;
  const bool magnetic = t.field == Field::magnetic;

  switch (r.kind) {
    case RowKind::partial:
      for (const Real& x : xs) out.emplace_back(partial_sum_magnetic(x, r.a, ctx));
      break;
    case RowKind::exact:
      for (const Real& x : xs) out.push_back(magnetic ? Complex(exact_magnetic(x, ctx)) : exact_electric(x, ctx));
      break;
    case RowKind::moments: {
      const MomentSolution sol =
          opt.cache_dir ? SolutionCache(*opt.cache_dir).load_or_solve(r.a, digits) : solve_moments(r.a, digits);
      const NegativeMomentTable mu(sol, 2 * sol.d, ctx);
      for (const Real& x : xs) {
        out.push_back(magnetic ? extrapolate_magnetic(x, sol, mu, std::nullopt, ctx).value
                               : extrapolate_electric(x, sol, mu, std::nullopt, ctx).value);
      }
      break;
    }
    case RowKind::pade: {
      const SeriesCoefficients coeffs = weak_field_coeffs(r.a + r.b + 2, ctx);
      const PadeApproximant pa = pade_build(coeffs, r.a, r.b, ctx);
      for (const Real& x : xs) out.emplace_back(pade_eval(pa, magnetic ? x : -x, ctx));
      break;
    }
    case RowKind::delta: {
      const SeriesCoefficients coeffs = weak_field_coeffs(r.a + 2, ctx);
      for (const Real& x : xs) out.emplace_back(weniger_delta(coeffs, r.a, magnetic ? -x : x, ctx));
      break;
    }
  }
  return out;
}

int agreement(const Complex& v, const Complex& exact, bool complex_row) {
  int n = agreeing_digits(v.real(), exact.real());
  if (complex_row) n = std::min(n, agreeing_digits(v.imag(), exact.imag()));
  return n;
}

}  // namespace

double estimate_solve_seconds(int d, int digits) {
  // Calibrated on d = 99 at 120 digits (about 0.6 s); cubic in size, linear in precision.
  const double n = (d + 1) / 100.0;
  return 0.6 * n * n * n * ((digits + 20) / 140.0);
}

OutputTable cmd_coeffs(int n_max, int digits, int print_digits) {
  if (n_max < 2) throw DomainError("coeffs: n_max must be at least 2");
  const PrecisionContext ctx = PrecisionContext::with_precision(digits);
  ScopedPrecision scope(ctx);
  const SeriesCoefficients coeffs = weak_field_coeffs(n_max, ctx);
  OutputTable t{"coefficients", {"n", "a_n", "exact"}, {}, {}};
  for (int n = 2; n <= n_max; ++n) {
    t.rows.push_back({std::to_string(n), to_string(coeffs.a_n(n), print_digits), coeffs.a_exact[n].get_str()});
  }
  return t;
}

OutputTable cmd_exact(const std::vector<FieldValue>& values, int digits, int print_digits) {
  require_values(values);
  const PrecisionContext ctx = PrecisionContext::with_precision(digits);
  ScopedPrecision scope(ctx);
  OutputTable t{"exact", {"field", "value", "re", "im"}, {}, {}};
  for (const auto& v : values) {
    const Real x = parse_positive(v);
    if (v.field == Field::magnetic) {
      t.rows.push_back({"magnetic", v.text, to_string(exact_magnetic(x, ctx), print_digits), ""});
    } else {
      const Complex z = exact_electric(x, ctx);
      t.rows.push_back({"electric", v.text, to_string(z.real(), print_digits), to_string(z.imag(), print_digits)});
    }
  }
  return t;
}

OutputTable cmd_solve(int d, int digits, const std::filesystem::path& cache_dir,
                      const std::optional<std::filesystem::path>& output) {
  if (d < 0) throw DomainError("solve: --moments must be at least 1");
  MomentSolution sol;
  std::filesystem::path file;
  bool fresh = true;
  if (output) {
    sol = solve_moments(d, digits);
    write_solution(sol, *output);
    file = *output;
  } else {
    SolutionCache cache(cache_dir);
    sol = cache.load_or_solve(d, digits, &fresh);
    file = cache.path_for(d, digits);
  }
  OutputTable t{"moment_solution", {"d", "digits", "residual", "file", "cached"}, {}, {}};
  ScopedPrecision scope(sol.context());
  t.rows.push_back({std::to_string(sol.d), std::to_string(sol.digits_used), to_string(sol.residual, 3),
                    file.string(), fresh ? "no" : "yes"});
  return t;
}

OutputTable cmd_extrapolate(const std::vector<FieldValue>& values, const std::filesystem::path& solution_file,
                            std::optional<int> K, int print_digits) {
  require_values(values);
  const MomentSolution sol = load_solution(solution_file);
  const PrecisionContext ctx = sol.context();
  ScopedPrecision scope(ctx);
  const int terms = K.value_or(2 * sol.d);
  const NegativeMomentTable mu(sol, terms, ctx);
  OutputTable t{"extrapolant", {"field", "value", "re", "im", "terms", "truncation_estimate"}, {}, {}};
  for (const auto& v : values) {
    const Real x = parse_positive(v);
    const ExtrapolantResult r = v.field == Field::magnetic ? extrapolate_magnetic(x, sol, mu, terms, ctx)
                                                           : extrapolate_electric(x, sol, mu, terms, ctx);
    const ConvergenceReport rep = convergence_report(r);
    t.rows.push_back({field_name(v.field), v.text, to_string(r.value.real(), print_digits),
                      r.is_complex ? to_string(r.value.imag(), print_digits) : "", std::to_string(r.terms_used),
                      to_string(rep.truncation_estimate, 3)});
  }
  return t;
}

OutputTable cmd_pade(int N, int M, const std::vector<FieldValue>& values, int digits, int print_digits) {
  require_values(values);
  const PrecisionContext ctx = PrecisionContext::with_precision(digits);
  ScopedPrecision scope(ctx);
  const SeriesCoefficients coeffs = weak_field_coeffs(N + M + 2, ctx);
  const PadeApproximant pa = pade_build(coeffs, N, M, ctx);
  OutputTable t{"pade", {"field", "value", "N", "M", "re"}, {}, {}};
  for (const auto& v : values) {
    const Real x = parse_positive(v);
    const Real y = pade_eval(pa, v.field == Field::magnetic ? x : -x, ctx);
    t.rows.push_back({field_name(v.field), v.text, std::to_string(N), std::to_string(M), to_string(y, print_digits)});
  }
  return t;
}

OutputTable cmd_delta(int n, std::optional<int> order, const std::vector<FieldValue>& values, int digits,
                      int print_digits) {
  require_values(values);
  const int k = order.value_or(delta_order_for_label(n));
  const PrecisionContext ctx = PrecisionContext::with_precision(digits);
  ScopedPrecision scope(ctx);
  const SeriesCoefficients coeffs = weak_field_coeffs(std::max(k, 1) + 3, ctx);
  OutputTable t{"delta", {"field", "value", "n", "order", "re"}, {}, {}};
  for (const auto& v : values) {
    const Real x = parse_positive(v);
    const Real y = weniger_delta_at_order(coeffs, k, v.field == Field::magnetic ? -x : x, ctx);
    t.rows.push_back({field_name(v.field), v.text, order ? "" : std::to_string(n), std::to_string(k),
                      to_string(y, print_digits)});
  }
  return t;
}

OutputTable cmd_table(const TableOptions& opt) {
  const TableLayout layout = layout_for(opt.id);
  std::vector<const RowSpec*> rows;
  double cost = 0;
  for (const auto& r : layout.rows) {
    if (r.full_only && !opt.full) continue;
    rows.push_back(&r);
    if (r.full_only) cost += estimate_row_seconds(r);
  }
  if (opt.full && !opt.allow_long) {
    throw LongJobRefused("table " + std::to_string(opt.id) + " at full scale is estimated at " +
                         format_seconds(cost) + "; rerun with --allow-long to proceed");
  }

  const bool electric = layout.field == Field::electric;
  const char* var = electric ? "kappa" : "beta";
  OutputTable t{"table" + std::to_string(opt.id), {"row"}, {}, {}};
  for (const auto& c : layout.columns) {
    const std::string head = std::string(var) + "=" + c;
    t.columns.push_back(head + ":re");
    if (electric) t.columns.push_back(head + ":im");
    t.columns.push_back(head + ":agree");
  }

  const RowSpec exact_spec{"Exact", RowKind::exact};
  const std::vector<Complex> exact = evaluate_row(exact_spec, layout, opt);
  const int sig = 20;
  for (const RowSpec* r : rows) {
    std::vector<std::string> line{r->label};
    std::vector<Complex> vals;
    try {
      vals = r->kind == RowKind::exact ? exact : evaluate_row(*r, layout, opt);
    } catch (const NumericalError& e) {
      t.notes.push_back("row " + r->label + ": " + e.what());
      for (size_t i = 1; i < t.columns.size(); ++i) line.push_back("");
      t.rows.push_back(std::move(line));
      continue;
    }
    const bool complex_row = electric && (r->kind == RowKind::moments || r->kind == RowKind::exact);
    for (size_t i = 0; i < vals.size(); ++i) {
      ScopedPrecision scope(PrecisionContext::with_precision(40));
      line.push_back(to_string(vals[i].real(), sig));
      if (electric) line.push_back(complex_row ? to_string(vals[i].imag(), sig) : "");
      line.push_back(std::to_string(agreement(vals[i], exact[i], complex_row)));
    }
    t.rows.push_back(std::move(line));
  }
  return t;
}

}  // namespace hefp::cli
