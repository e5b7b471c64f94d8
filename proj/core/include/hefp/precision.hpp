#pragma once

// Arbitrary-precision scalars on top of MPFR.
//
// Every Real produced by an arithmetic operation is rounded to the precision
// of the innermost ScopedPrecision on the calling thread. Public library
// entry points open such a scope from their PrecisionContext, so results are
// a pure function of (context, inputs) and independent threads never share
// precision state.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "hefp/errors.hpp"

namespace hefp {

class PrecisionContext {
 public:
  static constexpr int kMinDigits = 30;
  static constexpr int kDefaultGuardDigits = 20;

  /// Throws ConfigurationError when digits < 30 or guard_digits < 0.
  static PrecisionContext with_precision(int digits, int guard_digits = kDefaultGuardDigits);

  int digits() const noexcept { return digits_; }
  int guard_digits() const noexcept { return guard_digits_; }
  int working_digits() const noexcept { return digits_ + guard_digits_; }
  mpfr_prec_t bits() const noexcept;

  /// Same context with `extra` additional guard digits.
  PrecisionContext widened(int extra) const { return PrecisionContext(digits_, guard_digits_ + extra); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  PrecisionContext(int digits, int guard_digits) : digits_(digits), guard_digits_(guard_digits) {}

  int digits_;
  int guard_digits_;
};

/// Number of bits needed to carry `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits) noexcept;

/// Precision (bits) used for new values on this thread.
mpfr_prec_t current_precision_bits() noexcept;

class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionContext& ctx);
  explicit ScopedPrecision(mpfr_prec_t bits);
  ~ScopedPrecision();

  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  mpfr_prec_t previous_;
};

class Real {
 public:
  Real() {
    mpfr_init2(v_, current_precision_bits());
    mpfr_set_zero(v_, 1);
  }
  Real(int x) : Real(static_cast<long>(x)) {}
  Real(long x) {
    mpfr_init2(v_, current_precision_bits());
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(unsigned long x) {
    mpfr_init2(v_, current_precision_bits());
    mpfr_set_ui(v_, x, MPFR_RNDN);
  }
  Real(double x) {
    mpfr_init2(v_, current_precision_bits());
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  explicit Real(const mpz_class& x) {
    mpfr_init2(v_, current_precision_bits());
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  explicit Real(const mpq_class& x) {
    mpfr_init2(v_, current_precision_bits());
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  /// Parses a decimal literal ("1.25", "-3e-7"); throws DomainError otherwise.
  explicit Real(std::string_view decimal);

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Base-10 exponent e with 10^e <= |x| < 10^(e+1); 0 for zero.
  long decimal_exponent() const;

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long k) {
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long k) {
    mpfr_div_si(v_, v_, k, MPFR_RNDN);
    return *this;
  }

  friend Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long k) {
    Real r;
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long k, const Real& a) { return a * k; }
  friend Real operator/(const Real& a, long k) {
    Real r;
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b) {
    const int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  static Real pi();
  static Real euler_gamma();
  static Real ln2();

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
/// x * 2^e
Real ldexp(const Real& x, long e);
/// 10^e at the current precision.
Real pow10(long e);
const Real& max(const Real& a, const Real& b);
/// Copy of x rounded to the current thread precision.
Real rounded(const Real& x);

/// Scientific decimal with `significant` digits, e.g. "1.932384796847e-06".
std::string to_string(const Real& x, int significant);
/// Enough digits that parsing the string at the same precision restores x bit-exactly.
std::string to_exact_string(const Real& x);

/// Complex number as a pair of Reals sharing the thread precision.
class Complex {
 public:
  Complex() = default;
  Complex(Real re) : re_(std::move(re)) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(int re) : re_(re) {}
  Complex(double re) : re_(re) {}

  const Real& real() const noexcept { return re_; }
  const Real& imag() const noexcept { return im_; }
  Real& real() noexcept { return re_; }
  Real& imag() noexcept { return im_; }

  bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }

  static Complex i() { return Complex(Real(0), Real(1)); }

  Complex& operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& k) {
    re_ *= k;
    im_ *= k;
    return *this;
  }
  Complex& operator/=(const Real& k) {
    re_ /= k;
    im_ /= k;
    return *this;
  }

  friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }
  friend Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re_ + b.re_, a.im_ + b.im_); }
  friend Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re_ - b.re_, a.im_ - b.im_); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    Complex r = a;
    r *= b;
    return r;
  }
  friend Complex operator*(const Complex& a, const Real& k) { return Complex(a.re_ * k, a.im_ * k); }
  friend Complex operator*(const Real& k, const Complex& a) { return a * k; }
  friend Complex operator/(const Complex& a, const Real& k) { return Complex(a.re_ / k, a.im_ / k); }
  friend Complex operator/(const Complex& a, const Complex& b);

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal logarithm, imaginary part in (-pi, pi].
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
/// z^w = exp(w log z) on the principal branch.
Complex pow(const Complex& z, const Complex& w);
Complex sinh(const Complex& z);
Complex rounded(const Complex& z);

/// |a-b| <= 5*10^(-n) * max(|a|,|b|); complex values are compared componentwise.
bool agree_digits(const Real& a, const Real& b, int n);
bool agree_digits(const Complex& a, const Complex& b, int n);

/// Number of leading significant digits on which a and b agree (capped at `cap`).
int agreeing_digits(const Real& a, const Real& b, int cap = 60);

/// True when `value` rounds to the decimal literal `printed` at the number of
/// significant digits `printed` carries ("0.0139583" has 6, "2.0424e12" has 5).
bool rounds_to(const Real& value, std::string_view printed);
/// True when `printed` is `value` cut after its last printed digit.
bool truncates_to(const Real& value, std::string_view printed);
/// Either of the above: the printed digits are a correct rounding or truncation.
bool matches_printed(const Real& value, std::string_view printed);

/// Throws NumericalError naming `what` when x is NaN or infinite.
const Real& require_finite(const Real& x, std::string_view what);
const Complex& require_finite(const Complex& z, std::string_view what);

}  // namespace hefp
