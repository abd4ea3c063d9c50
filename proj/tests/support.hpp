#pragma once

#include <string>
#include <vector>

#include "wroots/driver.hpp"
#include "wroots/numeric.hpp"
#include "wroots/polynomial.hpp"

namespace wroots::test {

inline BigReal num(const std::string& s, int digits = kDefaultDigits) {
  return BigReal::parse(s, digits);
}

inline BigReal ten_to(long e, int digits = kDefaultDigits) { return pow(BigReal(10, digits), e); }

// |got - want| <= 10^tol_exp
inline bool close(const BigReal& got, const std::string& want, long tol_exp) {
  return abs(got - num(want, std::max(got.digits(), kDefaultDigits))) <= ten_to(tol_exp);
}

inline BigComplex cx(const std::string& re, const std::string& im = "0", int digits = kDefaultDigits) {
  return BigComplex::parse(re, im, digits);
}

inline ApproximationVector vec(const std::vector<std::pair<std::string, std::string>>& parts,
                               int digits = kDefaultDigits) {
  std::vector<BigComplex> v;
  for (const auto& [re, im] : parts) v.push_back(cx(re, im, digits));
  return ApproximationVector(std::move(v));
}

inline Polynomial real_poly(const std::vector<std::string>& coeffs, int digits = kDefaultDigits) {
  std::vector<DecimalComplex> c;
  for (const auto& s : coeffs) c.push_back({s, "0"});
  return Polynomial(std::move(c), digits);
}

inline Polynomial cubic(int digits = kDefaultDigits) { return real_poly({"1", "0", "-1", "0"}, digits); }

inline Polynomial degree7(int digits = kDefaultDigits) {
  return real_poly({"1", "0", "-1", "-10", "-1", "0", "-1", "10"}, digits);
}

inline ApproximationVector cubic_x0(int digits = kDefaultDigits) {
  return vec({{"1.74", "0"}, {"1.75", "0"}, {"-3.49", "0"}}, digits);
}

inline ApproximationVector degree7_x0(int digits = kDefaultDigits) {
  return vec({{"2.3", "0.1"}, {"1.2", "0.2"}, {"-0.8", "-0.2"}, {"0.1", "1.3"},
              {"-0.2", "-0.8"}, {"-1.2", "2.2"}, {"-1.2", "-1.8"}},
             digits);
}

inline std::vector<BigComplex> cubic_roots(int digits = kDefaultDigits) {
  return {cx("1", "0", digits), cx("0", "0", digits), cx("-1", "0", digits)};
}

// Monic polynomial with the given roots, expanded exactly (roots with short decimal parts).
inline Polynomial from_roots(const std::vector<BigComplex>& roots, int digits = kDefaultDigits) {
  std::vector<BigComplex> c{BigComplex(BigReal(1, digits))};
  for (const auto& r : roots) {
    std::vector<BigComplex> next(c.size() + 1, BigComplex(BigReal(0, digits)));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= c[i] * r;
    }
    c = std::move(next);
  }
  std::vector<DecimalComplex> text;
  for (const auto& z : c) text.push_back({z.re().to_string(), z.im().to_string()});
  return Polynomial(std::move(text), digits);
}

// Each component matched to its nearest root.
inline std::vector<BigComplex> matched_roots(const ApproximationVector& x,
                                             const std::vector<BigComplex>& roots) {
  std::vector<BigComplex> out;
  for (const auto& z : x.components()) {
    const BigComplex* best = &roots.front();
    for (const auto& r : roots) {
      if (abs(z - r) < abs(z - *best)) best = &r;
    }
    out.push_back(*best);
  }
  return out;
}

}  // namespace wroots::test
