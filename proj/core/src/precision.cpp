#include "hefp/precision.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <string>

namespace hefp {

namespace {

constexpr int kFallbackDigits = 64;

thread_local mpfr_prec_t tl_bits = 0;

struct MpfrString {
  char* p;
  ~MpfrString() {
    if (p) mpfr_free_str(p);
  }
};

}  // namespace

mpfr_prec_t digits_to_bits(int digits) noexcept {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 1;
}

PrecisionContext PrecisionContext::with_precision(int digits, int guard_digits) {
  if (digits < kMinDigits) {
    throw ConfigurationError("working precision must be at least " + std::to_string(kMinDigits) +
                             " digits, got " + std::to_string(digits));
  }
  if (guard_digits < 0) throw ConfigurationError("guard digits must be non-negative");
  return PrecisionContext(digits, guard_digits);
}

mpfr_prec_t PrecisionContext::bits() const noexcept { return digits_to_bits(working_digits()); }

mpfr_prec_t current_precision_bits() noexcept {
  return tl_bits != 0 ? tl_bits : digits_to_bits(kFallbackDigits);
}

ScopedPrecision::ScopedPrecision(const PrecisionContext& ctx) : ScopedPrecision(ctx.bits()) {}

ScopedPrecision::ScopedPrecision(mpfr_prec_t bits) : previous_(tl_bits) { tl_bits = bits; }

ScopedPrecision::~ScopedPrecision() { tl_bits = previous_; }

Real::Real(std::string_view decimal) {
  mpfr_init2(v_, current_precision_bits());
  std::string s(decimal);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || *end != '\0' || end == s.c_str()) {
    mpfr_clear(v_);
    throw DomainError("not a decimal number: '" + std::string(decimal) + "'");
  }
  if (!mpfr_number_p(v_)) {
    mpfr_clear(v_);
    throw DomainError("non-finite decimal: '" + std::string(decimal) + "'");
  }
}

long Real::decimal_exponent() const {
  if (is_zero() || !is_finite()) return 0;
  mpfr_exp_t e = 0;
  MpfrString s{mpfr_get_str(nullptr, &e, 10, 3, v_, MPFR_RNDZ)};
  return static_cast<long>(e) - 1;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real Real::euler_gamma() {
  Real r;
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real Real::ln2() {
  Real r;
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

#define HEFP_UNARY(name, fn)              \
  Real name(const Real& x) {              \
    Real r;                               \
    fn(r.get(), x.get(), MPFR_RNDN);      \
    return r;                             \
  }

HEFP_UNARY(abs, mpfr_abs)
HEFP_UNARY(sqrt, mpfr_sqrt)
HEFP_UNARY(exp, mpfr_exp)
HEFP_UNARY(log, mpfr_log)
HEFP_UNARY(log10, mpfr_log10)
HEFP_UNARY(sin, mpfr_sin)
HEFP_UNARY(cos, mpfr_cos)
HEFP_UNARY(sinh, mpfr_sinh)
HEFP_UNARY(cosh, mpfr_cosh)

#undef HEFP_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real pow10(long e) {
  Real r;
  Real ten(10L);
  mpfr_pow_si(r.get(), ten.get(), e, MPFR_RNDN);
  return r;
}

const Real& max(const Real& a, const Real& b) { return (a < b) ? b : a; }

Real rounded(const Real& x) {
  Real r;
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

namespace {

std::string format_decimal(const Real& x, int significant, mpfr_rnd_t rnd) {
  if (!x.is_finite()) return mpfr_nan_p(x.get()) ? "nan" : (x.sign() > 0 ? "inf" : "-inf");
  significant = std::max(significant, 1);
  if (x.is_zero()) {
    std::string z = "0";
    if (significant > 1) z += "." + std::string(static_cast<size_t>(significant - 1), '0');
    return z + "e+00";
  }
  mpfr_exp_t e = 0;
  MpfrString s{mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), x.get(), rnd)};
  std::string digits(s.p);
  std::string out;
  if (digits.front() == '-') {
    out.push_back('-');
    digits.erase(digits.begin());
  }
  out.push_back(digits.front());
  if (digits.size() > 1) {
    out.push_back('.');
    out.append(digits.begin() + 1, digits.end());
  }
  const long exp10 = static_cast<long>(e) - 1;
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", exp10 < 0 ? '-' : '+', exp10 < 0 ? -exp10 : exp10);
  return out + buf;
}

}  // namespace

std::string to_string(const Real& x, int significant) { return format_decimal(x, significant, MPFR_RNDN); }

std::string to_exact_string(const Real& x) {
  // ceil(p log10 2) + 1 digits round-trip under correct rounding.
  const int digits = static_cast<int>(std::ceil(static_cast<double>(x.precision()) * 0.30102999566398120)) + 1;
  return to_string(x, digits);
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex operator/(const Complex& a, const Complex& b) {
  // Smith's algorithm keeps the intermediate scale bounded.
  if (abs(b.re_) >= abs(b.im_)) {
    const Real r = b.im_ / b.re_;
    const Real den = b.re_ + b.im_ * r;
    return Complex((a.re_ + a.im_ * r) / den, (a.im_ - a.re_ * r) / den);
  }
  const Real r = b.re_ / b.im_;
  const Real den = b.re_ * r + b.im_;
  return Complex((a.re_ * r + a.im_) / den, (a.im_ * r - a.re_) / den);
}

Complex conj(const Complex& z) { return Complex(z.real(), -z.imag()); }

Real abs(const Complex& z) {
  Real r;
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }

Complex exp(const Complex& z) {
  const Real m = exp(z.real());
  Real s, c;
  mpfr_sin_cos(s.get(), c.get(), z.imag().get(), MPFR_RNDN);
  return Complex(m * c, m * s);
}

Complex log(const Complex& z) {
  if (z.real().is_zero() && z.imag().is_zero()) throw DomainError("log(0)");
  return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z) {
  if (z.imag().is_zero()) {
    if (z.real().sign() >= 0) return Complex(sqrt(z.real()), Real(0));
    return Complex(Real(0), sqrt(-z.real()));
  }
  const Real m = abs(z);
  Real re = sqrt((m + z.real()) / 2L);
  Real im = sqrt((m - z.real()) / 2L);
  if (z.imag().sign() < 0) im = -im;
  return Complex(std::move(re), std::move(im));
}

Complex pow(const Complex& z, const Complex& w) {
  if (z.real().is_zero() && z.imag().is_zero()) {
    if (w.real().sign() > 0) return Complex(0);
    throw DomainError("0 raised to a non-positive power");
  }
  return exp(w * log(z));
}

Complex sinh(const Complex& z) {
  // sinh(x+iy) = sinh x cos y + i cosh x sin y
  Real s, c;
  mpfr_sin_cos(s.get(), c.get(), z.imag().get(), MPFR_RNDN);
  return Complex(sinh(z.real()) * c, cosh(z.real()) * s);
}

Complex rounded(const Complex& z) { return Complex(rounded(z.real()), rounded(z.imag())); }

bool agree_digits(const Real& a, const Real& b, int n) {
  const Real diff = abs(a - b);
  if (diff.is_zero()) return true;
  const Real scale = max(abs(a), abs(b));
  return diff <= Real(5L) * pow10(-n) * scale;
}

bool agree_digits(const Complex& a, const Complex& b, int n) {
  return agree_digits(a.real(), b.real(), n) && agree_digits(a.imag(), b.imag(), n);
}

int agreeing_digits(const Real& a, const Real& b, int cap) {
  for (int n = 1; n <= cap; ++n) {
    if (!agree_digits(a, b, n)) return n - 1;
  }
  return cap;
}

namespace {

int printed_significant(std::string_view printed) {
  std::string mantissa(printed.substr(0, printed.find_first_of("eE")));
  int significant = 0;
  bool leading = true;
  for (char ch : mantissa) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++significant;
  }
  return significant;
}

}  // namespace

bool rounds_to(const Real& value, std::string_view printed) {
  const int significant = printed_significant(printed);
  if (significant == 0) return value.is_zero();
  const Real target(printed);
  return to_string(value, significant) == to_string(target, significant);
}

bool truncates_to(const Real& value, std::string_view printed) {
  const int significant = printed_significant(printed);
  if (significant == 0) return value.is_zero();
  const Real target(printed);
  return format_decimal(value, significant, MPFR_RNDZ) == to_string(target, significant);
}

bool matches_printed(const Real& value, std::string_view printed) {
  return rounds_to(value, printed) || truncates_to(value, printed);
}

const Real& require_finite(const Real& x, std::string_view what) {
  if (!x.is_finite()) throw NumericalError(std::string(what) + " is not finite");
  return x;
}

const Complex& require_finite(const Complex& z, std::string_view what) {
  if (!z.is_finite()) throw NumericalError(std::string(what) + " is not finite");
  return z;
}

}  // namespace hefp
