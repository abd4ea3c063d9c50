#pragma once

// Multiprecision real/complex scalars and p-norm helpers.
//
// Every BigReal carries its own binary precision. Binary operations produce
// a result at the larger of the operand precisions; there is no global
// precision state. Precision is requested in decimal digits and mapped to
// bits as ceil(digits * log2(10)) + 32 guard bits.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <mpfr.h>

#include "wroots/errors.hpp"

namespace wroots {

inline constexpr int kMinDigits = 32;
inline constexpr int kDefaultDigits = 64;

mpfr_prec_t digits_to_bits(int digits);
int bits_to_digits(mpfr_prec_t bits);

struct PrecisionContext {
  int digits = kDefaultDigits;
  double escalation_factor = 2.0;
  int max_digits = 2000;

  /// Throws DomainError unless digits >= 32, max_digits >= digits and factor > 1.
  void validate() const;
  /// Next working precision under escalation, capped at max_digits.
  int escalate(int current) const;
};

/// Decimal scientific rendering: mantissa "d.ddd" and integer exponent.
enum class Rounding { Nearest, TowardZero };

struct Scientific {
  std::string mantissa;
  long exponent = 0;

  std::string str() const;
};

class BigReal {
 public:
  BigReal();
  explicit BigReal(long value, int digits = kDefaultDigits);
  static BigReal with_bits(long value, mpfr_prec_t bits);
  static BigReal from_double(double value, int digits = kDefaultDigits);
  /// Correctly rounded parse of a decimal literal (sign, digits, '.', exponent).
  static BigReal parse(std::string_view text, int digits = kDefaultDigits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  int digits() const { return bits_to_digits(bits()); }
  BigReal at_digits(int digits) const;
  BigReal at_bits(mpfr_prec_t bits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Shortest decimal string that parses back to the same value at this precision.
  std::string to_string() const;
  std::string to_fixed(int decimals, Rounding mode = Rounding::Nearest) const;
  Scientific to_scientific(int significant, Rounding mode = Rounding::Nearest) const;
  /// floor(log10|x|) for nonzero x.
  long decimal_exponent() const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);
  BigReal operator-() const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  struct Raw {};
  BigReal(mpfr_prec_t bits, Raw);
  mpfr_t value_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator*(const BigReal& a, long b);
BigReal operator/(const BigReal& a, long b);
BigReal operator+(long a, const BigReal& b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(long a, const BigReal& b);

bool operator==(const BigReal& a, const BigReal& b);
std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
bool operator==(const BigReal& a, long b);
std::partial_ordering operator<=>(const BigReal& a, long b);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);
const BigReal& max(const BigReal& a, const BigReal& b);
const BigReal& min(const BigReal& a, const BigReal& b);
BigReal pi(int digits);

class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(BigReal re) : re_(std::move(re)), im_(BigReal::with_bits(0, re_.bits())) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  static BigComplex parse(std::string_view re, std::string_view im, int digits = kDefaultDigits);
  /// r * (cos theta + i sin theta)
  static BigComplex polar(const BigReal& r, const BigReal& theta);

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  BigReal& re() { return re_; }
  BigReal& im() { return im_; }

  mpfr_prec_t bits() const;
  int digits() const { return bits_to_digits(bits()); }
  BigComplex at_digits(int digits) const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex operator-() const { return {-re_, -im_}; }

 private:
  BigReal re_;
  BigReal im_;
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigComplex& b);
BigComplex operator/(BigComplex a, const BigComplex& b);
bool operator==(const BigComplex& a, const BigComplex& b);

BigReal abs(const BigComplex& z);
/// re^2 + im^2
BigReal norm_sq(const BigComplex& z);

/// Norm exponent in [1, inf]; infinity is an explicit alternative, never a sentinel float.
class Exponent {
 public:
  static Exponent infinity();
  static Exponent finite(const BigReal& value);
  /// "inf"/"infinity" or a decimal literal >= 1.
  static Exponent parse(std::string_view text, int digits = kDefaultDigits);

  bool is_infinite() const { return infinite_; }
  /// Throws DomainError when infinite.
  const BigReal& value() const;
  std::string str() const;
  Exponent at_digits(int digits) const;

 private:
  bool infinite_ = true;
  BigReal value_;
};

bool operator==(const Exponent& a, const Exponent& b);

/// Degree n, exponent p, its conjugate q, a = (n-1)^{1/q} and (n-1)^{1/p}.
struct NormContext {
  int n = 2;
  Exponent p;
  Exponent q;
  BigReal a;
  BigReal n1_root_p;
  int digits = kDefaultDigits;

  static NormContext make(int n, const Exponent& p, int digits = kDefaultDigits);
  NormContext at_digits(int new_digits) const { return make(n, p, new_digits); }
  bool is_infinity_norm() const { return p.is_infinite(); }
};

Exponent conjugate_exponent(const Exponent& p);
/// (n-1)^{1/q}; 1 for q = inf.
BigReal capacity_a(int n, const Exponent& q, int digits = kDefaultDigits);
/// (sum v_i^p)^{1/p}, or max v_i for p = inf. Entries must be nonnegative.
BigReal p_norm(std::span<const BigReal> values, const Exponent& p);

}  // namespace wroots
