#pragma once

// Convergent finite-part extrapolants built from a solved Laguerre reconstruction.

#include <optional>
#include <string>
#include <vector>

#include "hefp/moment_solver.hpp"
#include "hefp/precision.hpp"

namespace hefp {

enum class TailKind { I, J, L, M };

/// Negative moments mu_{-(2k+2)} of rho, split into the I/J/L/M pieces.
/// Construction is O(d^2); each query afterwards is O(d).
class NegativeMomentTable {
 public:
  NegativeMomentTable(const MomentSolution& sol, int k_max, const PrecisionContext& ctx);

  int d() const noexcept { return d_; }
  int k_max() const noexcept { return k_max_; }
  /// Largest k served by the I/J/L split, floor((d-1)/2); -1 when d = 0.
  int split_limit() const noexcept { return split_; }

  Real coefficient(TailKind kind, int k) const;
  /// I+J+L for k <= split_limit(), M otherwise.
  Real mu(int k) const;

 private:
  Real finite_part_sum(int k, int m_lo, int m_hi) const;
  Real convergent_sum(int k) const;

  int d_;
  int k_max_;
  int split_;
  mpfr_prec_t bits_;
  // prefix_[l][M-l] = sum_{m=l}^{M} c_m C(m,l); suffix_[l][M-l] = sum_{m=M}^{d} c_m C(m,l)
  std::vector<std::vector<Real>> prefix_;
  std::vector<std::vector<Real>> suffix_;
  std::vector<Real> inv_fact_;         // 1 / l!
  std::vector<Real> fp_base_;          // (1/2)^p / p! (ln(1/2) - psi(p+1))
  std::vector<Real> conv_;             // (q-1)! 2^q
};

/// One piece of mu_{-(2k+2)}; throws DomainError outside the piece's valid k range.
Real tail_coefficient(TailKind kind, int k, const MomentSolution& sol, const PrecisionContext& ctx);

struct ExtrapolantResult {
  Complex value;
  bool is_complex = false;
  int terms_used = 0;                // K; the sum runs over k = 0..K
  std::vector<Real> term_magnitudes;  // |x^(1-k) mu_k|
  Complex tail_sum;                   // signed sum of the K+1 tail terms
  Complex delta_or_lambda;            // Delta(beta) or Lambda(kappa)
  Real imaginary_term;                // (pi/2) kappa^(3/2) rho(1/sqrt kappa), electric only
};

/// Delta(beta) before projection onto the real axis; its imaginary part is rounding residue.
Complex delta_term_complex(const Real& beta, const MomentSolution& sol, const PrecisionContext& ctx);
Real delta_term(const Real& beta, const MomentSolution& sol, const PrecisionContext& ctx);
Real lambda_term(const Real& kappa, const MomentSolution& sol, const PrecisionContext& ctx);

ExtrapolantResult extrapolate_magnetic(const Real& beta, const MomentSolution& sol, std::optional<int> K,
                                       const PrecisionContext& ctx);
ExtrapolantResult extrapolate_magnetic(const Real& beta, const MomentSolution& sol, const NegativeMomentTable& mu,
                                       std::optional<int> K, const PrecisionContext& ctx);

enum class ElectricBranch {
  lower,  // beta -> e^{-i pi} kappa, positive imaginary part
  upper,  // beta -> e^{+i pi} kappa
};

ExtrapolantResult extrapolate_electric(const Real& kappa, const MomentSolution& sol, std::optional<int> K,
                                       const PrecisionContext& ctx, ElectricBranch branch = ElectricBranch::lower);
ExtrapolantResult extrapolate_electric(const Real& kappa, const MomentSolution& sol, const NegativeMomentTable& mu,
                                       std::optional<int> K, const PrecisionContext& ctx,
                                       ElectricBranch branch = ElectricBranch::lower);

struct ConvergenceReport {
  int monotone_from = 0;  // first index after which magnitudes never increase
  Real last_magnitude;
  Real truncation_estimate;
};

ConvergenceReport convergence_report(const std::vector<Real>& term_magnitudes);
ConvergenceReport convergence_report(const ExtrapolantResult& result);

/// JSON object (schema 1) with decimal-string values and the magnitude array.
std::string to_json(const ExtrapolantResult& result, int significant);

}  // namespace hefp
