#include "wroots/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>

namespace wroots {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;
constexpr int kGuardBits = 32;

struct MpfrStringDeleter {
  void operator()(char* s) const { mpfr_free_str(s); }
};
using MpfrString = std::unique_ptr<char, MpfrStringDeleter>;

bool moved_from(mpfr_srcptr x) { return x->_mpfr_d == nullptr; }

// Accepts [+-]digits[.digits][(e|E)[+-]digits] with at least one mantissa digit.
bool is_decimal_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t mantissa_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++mantissa_digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++mantissa_digits;
  }
  if (mantissa_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

mpfr_prec_t max_bits(const BigReal& a, const BigReal& b) { return std::max(a.bits(), b.bits()); }

// Raise the precision of x (keeping its value) when it is below bits.
void widen(BigReal& x, mpfr_prec_t bits) {
  if (x.bits() < bits) mpfr_prec_round(x.get(), bits, MPFR_RNDN);
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + kGuardBits;
}

int bits_to_digits(mpfr_prec_t bits) {
  const auto usable = std::max<mpfr_prec_t>(bits - kGuardBits, 1);
  return static_cast<int>(std::floor(static_cast<double>(usable) / kLog2Of10 + 1e-9));
}

void PrecisionContext::validate() const {
  if (digits < kMinDigits) throw DomainError("precision: digits must be >= 32");
  if (max_digits < digits) throw DomainError("precision: max_digits must be >= digits");
  if (!(escalation_factor > 1.0)) throw DomainError("precision: escalation factor must exceed 1");
}

int PrecisionContext::escalate(int current) const {
  const double next = std::ceil(current * escalation_factor);
  return static_cast<int>(std::min<double>(next, max_digits));
}

std::string Scientific::str() const { return mantissa + "e" + std::to_string(exponent); }

// ---------------------------------------------------------------------------
// BigReal

BigReal::BigReal(mpfr_prec_t bits, Raw) { mpfr_init2(value_, bits); }

BigReal::BigReal() : BigReal(digits_to_bits(kDefaultDigits), Raw{}) { mpfr_set_zero(value_, 1); }

BigReal::BigReal(long value, int digits) : BigReal(digits_to_bits(digits), Raw{}) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal BigReal::with_bits(long value, mpfr_prec_t bits) {
  BigReal r(bits, Raw{});
  mpfr_set_si(r.value_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_double(double value, int digits) {
  BigReal r(digits_to_bits(digits), Raw{});
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::parse(std::string_view text, int digits) {
  if (!is_decimal_literal(text)) {
    throw ParseError(ParseErrorKind::MalformedNumber,
                     "not a decimal literal: '" + std::string(text) + "'");
  }
  BigReal r(digits_to_bits(digits), Raw{});
  const std::string buffer(text);
  mpfr_strtofr(r.value_, buffer.c_str(), nullptr, 10, MPFR_RNDN);
  return r;
}

BigReal::BigReal(const BigReal& other) : BigReal(other.bits(), Raw{}) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_->_mpfr_d = nullptr;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this == &other) return *this;
  if (moved_from(value_)) {
    mpfr_init2(value_, other.bits());
  } else if (bits() != other.bits()) {
    mpfr_set_prec(value_, other.bits());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) std::swap(value_[0], other.value_[0]);
  return *this;
}

BigReal::~BigReal() {
  if (!moved_from(value_)) mpfr_clear(value_);
}

BigReal BigReal::at_bits(mpfr_prec_t new_bits) const {
  BigReal r(new_bits, Raw{});
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

BigReal BigReal::at_digits(int new_digits) const { return at_bits(digits_to_bits(new_digits)); }

std::string BigReal::to_string() const {
  if (is_zero()) return "0";
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  const auto n = mpfr_get_str_ndigits(10, bits());
  mpfr_exp_t exp10 = 0;
  MpfrString raw(mpfr_get_str(nullptr, &exp10, 10, n, value_, MPFR_RNDN));
  std::string digits_str(raw.get());
  std::string sign_str;
  if (!digits_str.empty() && digits_str[0] == '-') {
    sign_str = "-";
    digits_str.erase(0, 1);
  }
  while (digits_str.size() > 1 && digits_str.back() == '0') digits_str.pop_back();
  std::string out = sign_str + digits_str.substr(0, 1);
  if (digits_str.size() > 1) out += "." + digits_str.substr(1);
  const long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

std::string BigReal::to_fixed(int decimals, Rounding mode) const {
  char* raw = nullptr;
  if (mode == Rounding::TowardZero) {
    mpfr_asprintf(&raw, "%.*RZf", decimals, value_);
  } else {
    mpfr_asprintf(&raw, "%.*RNf", decimals, value_);
  }
  MpfrString holder(raw);
  return std::string(raw);
}

Scientific BigReal::to_scientific(int significant, Rounding mode) const {
  Scientific s;
  if (is_zero()) {
    s.mantissa = "0." + std::string(static_cast<std::size_t>(std::max(significant - 1, 0)), '0');
    if (significant <= 1) s.mantissa = "0";
    return s;
  }
  mpfr_exp_t exp10 = 0;
  MpfrString raw(mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(significant), value_,
                              mode == Rounding::TowardZero ? MPFR_RNDZ : MPFR_RNDN));
  std::string digits_str(raw.get());
  std::string sign_str;
  if (digits_str[0] == '-') {
    sign_str = "-";
    digits_str.erase(0, 1);
  }
  s.mantissa = sign_str + digits_str.substr(0, 1);
  if (digits_str.size() > 1) s.mantissa += "." + digits_str.substr(1);
  s.exponent = static_cast<long>(exp10) - 1;
  return s;
}

long BigReal::decimal_exponent() const {
  if (is_zero()) throw DomainError("decimal_exponent of zero");
  return to_scientific(20).exponent;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen(*this, rhs.bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen(*this, rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen(*this, rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen(*this, rhs.bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(bits(), Raw{});
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {

template <typename Fn>
BigReal binary(const BigReal& a, const BigReal& b, Fn fn) {
  BigReal r = BigReal::with_bits(0, max_bits(a, b));
  fn(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <typename Fn>
BigReal unary(const BigReal& a, Fn fn) {
  BigReal r = BigReal::with_bits(0, a.bits());
  fn(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_add); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_sub); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_mul); }
BigReal operator/(const BigReal& a, const BigReal& b) { return binary(a, b, mpfr_div); }

BigReal operator+(const BigReal& a, long b) {
  BigReal r = BigReal::with_bits(0, a.bits());
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r = BigReal::with_bits(0, a.bits());
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r = BigReal::with_bits(0, a.bits());
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  BigReal r = BigReal::with_bits(0, a.bits());
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

BigReal operator+(long a, const BigReal& b) { return b + a; }
BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator-(long a, const BigReal& b) {
  BigReal r = BigReal::with_bits(0, b.bits());
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r = BigReal::with_bits(0, b.bits());
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.get(), b) == 0; }

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.get(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative value");
  return unary(x, mpfr_sqrt);
}

BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log of nonpositive value");
  return unary(x, mpfr_log);
}

BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log10 of nonpositive value");
  return unary(x, mpfr_log10);
}

BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }

BigReal pow(const BigReal& base, const BigReal& exponent) {
  return binary(base, exponent, mpfr_pow);
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal r = BigReal::with_bits(0, base.bits());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

const BigReal& max(const BigReal& a, const BigReal& b) { return (a < b) ? b : a; }
const BigReal& min(const BigReal& a, const BigReal& b) { return (b < a) ? b : a; }

BigReal pi(int digits) {
  BigReal r(0, digits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// BigComplex

BigComplex BigComplex::parse(std::string_view re, std::string_view im, int digits) {
  return {BigReal::parse(re, digits), BigReal::parse(im, digits)};
}

BigComplex BigComplex::polar(const BigReal& r, const BigReal& theta) {
  return {r * cos(theta), r * sin(theta)};
}

mpfr_prec_t BigComplex::bits() const { return max_bits(re_, im_); }

BigComplex BigComplex::at_digits(int new_digits) const {
  return {re_.at_digits(new_digits), im_.at_digits(new_digits)};
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  const auto prec = std::max(bits(), rhs.bits());
  BigReal re = BigReal::with_bits(0, prec);
  // (a+bi)(c+di) = (ac - bd) + (ad + bc)i, each part with a single rounding.
  mpfr_fmms(re.get(), re_.get(), rhs.re_.get(), im_.get(), rhs.im_.get(), MPFR_RNDN);
  widen(im_, prec);
  mpfr_fmma(im_.get(), re_.get(), rhs.im_.get(), im_.get(), rhs.re_.get(), MPFR_RNDN);
  re_ = std::move(re);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  if (rhs.is_zero()) throw DomainError("complex division by zero");
  const auto prec = std::max(bits(), rhs.bits());
  BigReal den = BigReal::with_bits(0, prec);
  mpfr_fmma(den.get(), rhs.re_.get(), rhs.re_.get(), rhs.im_.get(), rhs.im_.get(), MPFR_RNDN);
  BigReal re = BigReal::with_bits(0, prec);
  mpfr_fmma(re.get(), re_.get(), rhs.re_.get(), im_.get(), rhs.im_.get(), MPFR_RNDN);
  widen(im_, prec);
  mpfr_fmms(im_.get(), im_.get(), rhs.re_.get(), re_.get(), rhs.im_.get(), MPFR_RNDN);
  re_ = std::move(re);
  re_ /= den;
  im_ /= den;
  return *this;
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

bool operator==(const BigComplex& a, const BigComplex& b) {
  return a.re() == b.re() && a.im() == b.im();
}

BigReal norm_sq(const BigComplex& z) {
  BigReal r = BigReal::with_bits(0, z.bits());
  mpfr_fmma(r.get(), z.re().get(), z.re().get(), z.im().get(), z.im().get(), MPFR_RNDN);
  return r;
}

BigReal abs(const BigComplex& z) {
  BigReal r = BigReal::with_bits(0, z.bits());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// Norms

Exponent Exponent::infinity() { return Exponent{}; }

Exponent Exponent::finite(const BigReal& value) {
  if (!value.is_finite() || value < 1) throw DomainError("norm exponent must be >= 1");
  Exponent e;
  e.infinite_ = false;
  e.value_ = value;
  return e;
}

Exponent Exponent::parse(std::string_view text, int digits) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity") return infinity();
  BigReal v;
  try {
    v = BigReal::parse(text, digits);
  } catch (const ParseError&) {
    throw DomainError("invalid norm exponent '" + std::string(text) + "'");
  }
  return finite(v);
}

const BigReal& Exponent::value() const {
  if (infinite_) throw DomainError("infinite exponent has no finite value");
  return value_;
}

std::string Exponent::str() const { return infinite_ ? "inf" : value_.to_string(); }

Exponent Exponent::at_digits(int digits) const {
  if (infinite_) return *this;
  return finite(value_.at_digits(digits));
}

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return a.value() == b.value();
}

Exponent conjugate_exponent(const Exponent& p) {
  if (p.is_infinite()) return Exponent::finite(BigReal(1));
  const BigReal& v = p.value();
  if (v < 1) throw DomainError("conjugate exponent requires p >= 1");
  if (v == 1) return Exponent::infinity();
  return Exponent::finite(v / (v - 1));
}

BigReal capacity_a(int n, const Exponent& q, int digits) {
  if (n < 2) throw DomainError("capacity_a requires n >= 2");
  if (q.is_infinite()) return BigReal(1, digits);
  const BigReal base(n - 1, digits);
  return pow(base, BigReal(1, digits) / q.value().at_digits(digits));
}

NormContext NormContext::make(int n, const Exponent& p, int digits) {
  if (n < 2) throw DomainError("norm context requires n >= 2");
  NormContext ctx;
  ctx.n = n;
  ctx.p = p.at_digits(digits);
  ctx.q = conjugate_exponent(ctx.p).at_digits(digits);
  ctx.a = capacity_a(n, ctx.q, digits);
  ctx.n1_root_p = capacity_a(n, ctx.p, digits);
  ctx.digits = digits;
  return ctx;
}

BigReal p_norm(std::span<const BigReal> values, const Exponent& p) {
  if (values.empty()) throw DomainError("p_norm of empty sequence");
  for (const auto& v : values) {
    if (v.sign() < 0) throw DomainError("p_norm requires nonnegative entries");
  }
  if (p.is_infinite()) {
    const BigReal* best = &values[0];
    for (const auto& v : values) {
      if (*best < v) best = &v;
    }
    return *best;
  }
  const BigReal& e = p.value();
  if (e == 1) {
    BigReal sum = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) sum += values[i];
    return sum;
  }
  BigReal sum = pow(values[0], e);
  for (std::size_t i = 1; i < values.size(); ++i) sum += pow(values[i], e);
  return pow(sum, 1 / e);
}

}  // namespace wroots
