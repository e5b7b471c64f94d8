#include "hefp/quadrature.hpp"

#include <cmath>
#include <string>

namespace hefp {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kLn10 = 2.302585092994046;
constexpr mpfr_prec_t kGuardBits = 40;  // headroom so a 10^-target stopping test is reachable

struct Rule {
  // Returns false when the node falls outside the usable range on this side.
  std::function<bool(const Real& t, Real& node_sum)> add;
  double t_max_left;
  double t_max_right;
};

QuadratureResult run_levels(const Rule& rule, const QuadratureOptions& opt, const char* name) {
  const Real eps = pow10(-opt.target_digits);
  QuadratureResult res;
  Real previous;
  for (int level = 0; level <= opt.max_level; ++level) {
    const Real h = ldexp(Real(1), -level);
    const long step = level == 0 ? 1 : 2;
    const double hd = std::ldexp(1.0, -level);
    Real sum;
    if (level == 0) {
      if (!rule.add(Real(0), sum)) throw NumericalError(std::string(name) + ": centre node rejected");
      ++res.evaluations;
    }
    for (long k = 1; k * hd <= rule.t_max_right; k += step) {
      if (!rule.add(h * k, sum)) break;
      ++res.evaluations;
    }
    for (long k = 1; k * hd <= rule.t_max_left; k += step) {
      if (!rule.add(-(h * k), sum)) break;
      ++res.evaluations;
    }
    Real current = level == 0 ? h * sum : previous / 2L + h * sum;
    require_finite(current, name);
    if (level >= 3) {
      Real err = abs(current - previous);
      const Real scale = abs(current);
      if (err <= eps * scale || (scale.is_zero() && err.is_zero())) {
        res.value = std::move(current);
        res.error_estimate = std::move(err);
        res.levels = level;
        return res;
      }
    }
    previous = std::move(current);
  }
  throw NumericalError(std::string(name) + ": no convergence to 1e-" + std::to_string(opt.target_digits) +
                       " after level " + std::to_string(opt.max_level) + " (" + std::to_string(res.evaluations) +
                       " evaluations)");
}

QuadratureResult round_back(QuadratureResult r, mpfr_prec_t bits) {
  ScopedPrecision outer(bits);
  r.value = rounded(r.value);
  r.error_estimate = rounded(r.error_estimate);
  return r;
}

}  // namespace

QuadratureResult tanh_sinh(const RealFunction& f, const Real& a, const Real& b, const QuadratureOptions& opt) {
  const mpfr_prec_t bits = current_precision_bits();
  ScopedPrecision guard(bits + kGuardBits);
  const Real half = (b - a) / 2L;
  const Real pi_half = Real::pi() / 2L;
  // Nodes reach within 10^-(2 target + 20) of the endpoints, so the untouched
  // mass of an x^(-1/2) endpoint singularity stays below the target.
  const double t_max = std::asinh((opt.target_digits + 10) * kLn10 / kHalfPi);
  Rule rule;
  rule.t_max_left = rule.t_max_right = t_max;
  rule.add = [&](const Real& t, Real& node_sum) {
    const Real u = pi_half * sinh(t);
    // 1 -+ tanh(u) = 2 / (1 + e^(+-2u)) keeps the endpoint distance exact.
    const Real e = exp(ldexp(abs(u), 1));
    const Real dist = half * 2L / (Real(1) + e);
    const Real c = cosh(u);
    const Real w = half * pi_half * cosh(t) / (c * c);
    if (t.sign() < 0) {
      if (opt.left_cutoff && dist < *opt.left_cutoff) return false;
      node_sum += w * f(a + dist);
    } else if (t.sign() > 0) {
      if (dist.is_zero()) return false;
      node_sum += w * f(b - dist);
    } else {
      node_sum += w * f(a + half);
    }
    return true;
  };
  return round_back(run_levels(rule, opt, "tanh_sinh"), bits);
}

QuadratureResult exp_sinh(const RealFunction& f, const Real& a, const QuadratureOptions& opt) {
  const mpfr_prec_t bits = current_precision_bits();
  ScopedPrecision guard(bits + kGuardBits);
  const Real pi_half = Real::pi() / 2L;
  const Real eps = pow10(-(opt.target_digits + 10));
  Rule rule;
  rule.t_max_left = std::asinh((opt.target_digits + 10) * kLn10 / kHalfPi);
  rule.t_max_right = 8.0;
  Real scale;  // largest |w f| seen so far, for the right-hand stopping rule
  int small_run = 0;
  rule.add = [&](const Real& t, Real& node_sum) {
    const Real x = exp(pi_half * sinh(t));
    const Real w = pi_half * cosh(t) * x;
    if (t.sign() < 0 && opt.left_cutoff && x < *opt.left_cutoff) return false;
    const Real term = w * f(a + x);
    node_sum += term;
    const Real m = abs(term);
    if (m > scale) scale = m;
    if (t.sign() > 0) {
      small_run = (m <= eps * scale) ? small_run + 1 : 0;
      if (small_run >= 2) {
        small_run = 0;
        return false;
      }
    }
    return true;
  };
  return round_back(run_levels(rule, opt, "exp_sinh"), bits);
}

}  // namespace hefp
