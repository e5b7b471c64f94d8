#include "hefp/extrapolant.hpp"

#include <string>

#include <json.hpp>

namespace hefp {

namespace {

const char* kind_name(TailKind kind) {
  switch (kind) {
    case TailKind::I: return "I";
    case TailKind::J: return "J";
    case TailKind::L: return "L";
    case TailKind::M: return "M";
  }
  return "?";
}

int default_terms(const MomentSolution& sol, std::optional<int> K) {
  const int k = K.value_or(2 * sol.d);
  if (k < 0) throw DomainError("extrapolant: K must be non-negative");
  return k;
}

}  // namespace

NegativeMomentTable::NegativeMomentTable(const MomentSolution& sol, int k_max, const PrecisionContext& ctx)
    : d_(sol.d), k_max_(k_max), split_(sol.d >= 1 ? (sol.d - 1) / 2 : -1), bits_(ctx.bits()) {
  if (k_max < 0) throw DomainError("NegativeMomentTable: k_max must be non-negative");
  ScopedPrecision scope(ctx);
  const int d = d_;

  // Pascal rows C(m, l) for m <= d, exact.
  std::vector<std::vector<mpz_class>> binom(static_cast<size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    binom[m].resize(static_cast<size_t>(m) + 1);
    binom[m][0] = binom[m][m] = 1;
    for (int l = 1; l < m; ++l) binom[m][l] = binom[m - 1][l - 1] + binom[m - 1][l];
  }

  prefix_.resize(static_cast<size_t>(d) + 1);
  suffix_.resize(static_cast<size_t>(d) + 1);
  Real t;
  for (int l = 0; l <= d; ++l) {
    const int len = d - l + 1;
    std::vector<Real> terms(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j) mpfr_mul_z(terms[j].get(), sol.c[l + j].get(), binom[l + j][l].get_mpz_t(), MPFR_RNDN);
    prefix_[l].resize(static_cast<size_t>(len));
    suffix_[l].resize(static_cast<size_t>(len));
    Real acc;
    for (int j = 0; j < len; ++j) {
      acc += terms[j];
      prefix_[l][j] = acc;
    }
    acc = Real(0);
    for (int j = len - 1; j >= 0; --j) {
      acc += terms[j];
      suffix_[l][j] = acc;
    }
  }

  inv_fact_.reserve(static_cast<size_t>(d) + 1);
  Real f(1);
  for (int l = 0; l <= d; ++l) {
    if (l > 0) f /= l;
    inv_fact_.push_back(f);
  }

  // (1/2)^p / p! (ln(1/2) - psi(p+1)),  psi(p+1) = -gamma + H_p
  const int p_max = 2 * k_max;
  fp_base_.reserve(static_cast<size_t>(p_max) + 1);
  const Real ln_half = -Real::ln2();
  const Real gamma = Real::euler_gamma();
  Real harmonic;
  Real scale(1);
  for (int p = 0; p <= p_max; ++p) {
    if (p > 0) {
      harmonic += Real(1) / Real(p);
      scale /= 2L * p;
    }
    fp_base_.push_back(scale * (ln_half + gamma - harmonic));
  }

  // (q-1)! 2^q
  conv_.resize(static_cast<size_t>(d) + 1);
  Real g(2);
  for (int q = 1; q <= d; ++q) {
    if (q > 1) g *= 2L * (q - 1);
    conv_[q] = g;
  }
}

Real NegativeMomentTable::finite_part_sum(int k, int m_lo, int m_hi) const {
  // sum_{l <= min(2k, m_hi)} fp(k,l) (-1)^l / l! * sum_{m = max(l, m_lo)}^{m_hi} c_m C(m,l)
  // with fp(k,l) = (-1)^(1-l) fp_base_[2k-l]; the two signs combine to -1.
  Real sum;
  const int l_hi = std::min(2 * k, m_hi);
  for (int l = 0; l <= l_hi; ++l) {
    const int from = std::max(l, m_lo);
    if (from > m_hi) continue;
    const Real& range = (m_hi == d_) ? suffix_[l][from - l] : prefix_[l][m_hi - l];
    sum -= fp_base_[2 * k - l] * inv_fact_[l] * range;
  }
  return sum;
}

Real NegativeMomentTable::convergent_sum(int k) const {
  Real sum;
  for (int l = 2 * k + 1; l <= d_; ++l) {
    const Real term = conv_[l - 2 * k] * inv_fact_[l] * suffix_[l][0];
    if (l % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

Real NegativeMomentTable::coefficient(TailKind kind, int k) const {
  if (k < 0 || k > k_max_) {
    throw DomainError("tail coefficient: k = " + std::to_string(k) + " outside 0.." + std::to_string(k_max_));
  }
  const bool split_range = k <= split_;
  if ((kind == TailKind::M) == split_range) {
    throw DomainError(std::string("tail coefficient ") + kind_name(kind) + " is not defined for k = " +
                      std::to_string(k) + " with d = " + std::to_string(d_));
  }
  ScopedPrecision scope(bits_);
  switch (kind) {
    case TailKind::I: return finite_part_sum(k, 0, 2 * k);
    case TailKind::J: return finite_part_sum(k, 2 * k + 1, d_);
    case TailKind::L: return convergent_sum(k);
    case TailKind::M: return finite_part_sum(k, 0, d_);
  }
  throw DomainError("tail coefficient: unknown kind");
}

Real NegativeMomentTable::mu(int k) const {
  if (k <= split_) {
    return coefficient(TailKind::I, k) + coefficient(TailKind::J, k) + coefficient(TailKind::L, k);
  }
  return coefficient(TailKind::M, k);
}

Real tail_coefficient(TailKind kind, int k, const MomentSolution& sol, const PrecisionContext& ctx) {
  const NegativeMomentTable table(sol, std::max(k, 0), ctx);
  return table.coefficient(kind, k);
}

Complex delta_term_complex(const Real& beta, const MomentSolution& sol, const PrecisionContext& ctx) {
  if (beta.sign() <= 0) throw DomainError("delta_term: beta must be positive");
  ScopedPrecision scope(ctx);
  const Real sb = sqrt(beta);
  const Real t = Real(1) / sb;
  const Complex rp = rho_eval(sol, Complex(Real(0), t), ctx);
  const Complex rm = rho_eval(sol, Complex(Real(0), -t), ctx);
  // (sqrt(b) ln b / (4i)) (rp - rm) = -i sqrt(b) ln b / 4 (rp - rm)
  const Complex first = (rp + rm) * (Real::pi() * sb / 4L);
  const Complex diff = rp - rm;
  const Complex second = Complex(diff.imag(), -diff.real()) * (sb * log(beta) / 4L);
  return first + second;
}

Real delta_term(const Real& beta, const MomentSolution& sol, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  const Complex delta = delta_term_complex(beta, sol, ctx);
  const Real tol = pow10(-(ctx.digits() - ctx.guard_digits())) * max(Real(1), abs(delta.real()));
  if (abs(delta.imag()) > tol) {
    throw NumericalError("delta_term: imaginary residue " + to_string(delta.imag(), 3) + " exceeds tolerance");
  }
  return delta.real();
}

Real lambda_term(const Real& kappa, const MomentSolution& sol, const PrecisionContext& ctx) {
  if (kappa.sign() <= 0) throw DomainError("lambda_term: kappa must be positive");
  ScopedPrecision scope(ctx);
  const Real sk = sqrt(kappa);
  const Real t = Real(1) / sk;
  return sk / 2L * log(sk) * (rho_eval(sol, t, ctx) - rho_eval(sol, -t, ctx));
}

ExtrapolantResult extrapolate_magnetic(const Real& beta, const MomentSolution& sol, std::optional<int> K,
                                       const PrecisionContext& ctx) {
  const int k = default_terms(sol, K);
  return extrapolate_magnetic(beta, sol, NegativeMomentTable(sol, k, ctx), k, ctx);
}

ExtrapolantResult extrapolate_magnetic(const Real& beta, const MomentSolution& sol, const NegativeMomentTable& mu,
                                       std::optional<int> K, const PrecisionContext& ctx) {
  if (beta.sign() <= 0) throw DomainError("extrapolate_magnetic: beta must be positive");
  const int terms = default_terms(sol, K);
  if (terms > mu.k_max()) throw DomainError("extrapolate_magnetic: moment table too short for K");
  ScopedPrecision scope(ctx);
  ExtrapolantResult res;
  res.terms_used = terms;
  const Real inv = Real(1) / beta;
  Real power = beta;  // beta^(1-k)
  Real tail;
  for (int k = 0; k <= terms; ++k) {
    const Real term = power * mu.mu(k);
    res.term_magnitudes.push_back(abs(term));
    if (k % 2 == 0) tail += term;
    else tail -= term;
    power *= inv;
  }
  const Real delta = delta_term(beta, sol, ctx);
  res.tail_sum = Complex(tail);
  res.delta_or_lambda = Complex(delta);
  res.value = Complex(tail + beta * delta);
  return res;
}

ExtrapolantResult extrapolate_electric(const Real& kappa, const MomentSolution& sol, std::optional<int> K,
                                       const PrecisionContext& ctx, ElectricBranch branch) {
  const int k = default_terms(sol, K);
  return extrapolate_electric(kappa, sol, NegativeMomentTable(sol, k, ctx), k, ctx, branch);
}

ExtrapolantResult extrapolate_electric(const Real& kappa, const MomentSolution& sol, const NegativeMomentTable& mu,
                                       std::optional<int> K, const PrecisionContext& ctx, ElectricBranch branch) {
  if (kappa.sign() <= 0) throw DomainError("extrapolate_electric: kappa must be positive");
  const int terms = default_terms(sol, K);
  if (terms > mu.k_max()) throw DomainError("extrapolate_electric: moment table too short for K");
  ScopedPrecision scope(ctx);
  ExtrapolantResult res;
  res.is_complex = true;
  res.terms_used = terms;
  const Real inv = Real(1) / kappa;
  Real power = kappa;  // kappa^(1-k)
  Real tail;
  for (int k = 0; k <= terms; ++k) {
    const Real term = power * mu.mu(k);
    res.term_magnitudes.push_back(abs(term));
    tail -= term;
    power *= inv;
  }
  const Real lambda = lambda_term(kappa, sol, ctx);
  const Real sk = sqrt(kappa);
  Real im = Real::pi() / 2L * kappa * sk * rho_eval(sol, Real(1) / sk, ctx);
  if (branch == ElectricBranch::upper) im = -im;
  res.tail_sum = Complex(tail);
  res.delta_or_lambda = Complex(lambda);
  res.imaginary_term = im;
  res.value = Complex(tail - kappa * lambda, im);
  return res;
}

ConvergenceReport convergence_report(const std::vector<Real>& mags) {
  ConvergenceReport r;
  if (mags.empty()) return r;
  int from = static_cast<int>(mags.size()) - 1;
  while (from > 0 && mags[from] <= mags[from - 1]) --from;
  r.monotone_from = from;
  r.last_magnitude = mags.back();
  r.truncation_estimate = mags.back();
  return r;
}

ConvergenceReport convergence_report(const ExtrapolantResult& result) {
  return convergence_report(result.term_magnitudes);
}

std::string to_json(const ExtrapolantResult& result, int significant) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["kind"] = result.is_complex ? "electric_extrapolant" : "magnetic_extrapolant";
  j["re"] = to_string(result.value.real(), significant);
  if (result.is_complex) j["im"] = to_string(result.value.imag(), significant);
  j["terms_used"] = result.terms_used;
  j[result.is_complex ? "lambda" : "delta"] = to_string(result.delta_or_lambda.real(), significant);
  const ConvergenceReport report = convergence_report(result);
  j["monotone_from"] = report.monotone_from;
  j["truncation_estimate"] = to_string(report.truncation_estimate, 6);
  auto& mags = j["term_magnitudes"] = nlohmann::ordered_json::array();
  for (const Real& m : result.term_magnitudes) mags.push_back(to_string(m, 6));
  return j.dump();
}

}  // namespace hefp
