#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "wroots/numeric.hpp"

namespace wroots {

/// Decimal text of one complex coefficient, exact as read from disk.
using DecimalComplex = std::array<std::string, 2>;

/// Complex polynomial of degree n >= 2, coefficients leading-first.
///
/// The exact decimal text of every coefficient is retained so the polynomial
/// can be re-materialised at a higher working precision without inheriting
/// the rounding of an earlier one.
class Polynomial {
 public:
  /// Throws ParseError (DegreeTooSmall / ZeroLeading / MalformedNumber).
  Polynomial(std::vector<DecimalComplex> coefficients, int digits = kDefaultDigits);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  int digits() const { return digits_; }
  const BigComplex& leading() const { return coefficients_.front(); }
  const std::vector<BigComplex>& coefficients() const { return coefficients_; }
  const std::vector<DecimalComplex>& decimal_coefficients() const { return text_; }

  /// Same polynomial parsed at another precision.
  Polynomial at_digits(int digits) const { return Polynomial(text_, digits); }

  /// Horner evaluation at the larger of the polynomial and argument precisions.
  BigComplex evaluate(const BigComplex& z) const;

 private:
  std::vector<DecimalComplex> text_;
  std::vector<BigComplex> coefficients_;
  int digits_;
};

/// z^n - 1
Polynomial unity_polynomial(int n, int digits = kDefaultDigits);
/// exp(2 pi i k / n), k = 0..n-1
std::vector<BigComplex> unity_roots(int n, int digits = kDefaultDigits);

/// {"coefficients": [[re, im], ...]} leading-first, decimal strings.
Polynomial parse_polynomial(std::string_view json_text, int digits = kDefaultDigits);
std::string serialize_polynomial(const Polynomial& f);

/// {"components": [[re, im], ...]}
std::vector<BigComplex> parse_vector(std::string_view json_text, int digits = kDefaultDigits);
std::string serialize_vector(const std::vector<BigComplex>& v);

/// max |f(z) - a0 prod (z - r_i)| / max(1, |f(z)|) over the given sample points.
BigReal root_vector_defect(const Polynomial& f, const std::vector<BigComplex>& roots,
                           const std::vector<BigComplex>& samples);

}  // namespace wroots
