#include <random>

#include "doctest.h"
#include "support.hpp"
#include "wroots/polynomial.hpp"

using namespace wroots;
using namespace wroots::test;

TEST_CASE("evaluate") {
  const Polynomial f = cubic();
  CHECK(close(f.evaluate(cx("1.74")).re(), "3.528024", -60));
  CHECK(f.evaluate(cx("1.74")).im().is_zero());
  CHECK(f.evaluate(cx("1")).is_zero());
  const Polynomial z20 = unity_polynomial(20);
  CHECK(abs(z20.evaluate(cx("0", "1"))) < ten_to(-60));
}

TEST_CASE("parse and serialize") {
  const Polynomial f =
      parse_polynomial(R"({"coefficients": [["1","0"],["0","0"],["-1","0"],["0","0"]]})");
  CHECK(f.degree() == 3);
  CHECK(f.evaluate(cx("2")) == cx("6"));

  const Polynomial g = parse_polynomial(
      R"({"coefficients": [["1","0"],["0","0"],["-1","0"],["-10","0"],["-1","0"],["0","0"],["-1","0"],["10","0"]]})");
  CHECK(g.degree() == 7);
  // 2^7 - 2^5 - 10*2^4 - 2^3 - 2 + 10
  CHECK(g.evaluate(cx("2")) == cx("-64"));

  const Polynomial back = parse_polynomial(serialize_polynomial(g), 200);
  CHECK(back.decimal_coefficients() == g.decimal_coefficients());
  CHECK(back.digits() == 200);

  auto kind_of = [](const char* text) {
    try {
      parse_polynomial(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("accepted: " << text);
    return ParseErrorKind::Schema;
  };
  CHECK(kind_of(R"({"coefficients": [["1","0"],["2","0"]]})") == ParseErrorKind::DegreeTooSmall);
  CHECK(kind_of(R"({"coefficients": [["0","0"],["1","0"],["2","0"]]})") == ParseErrorKind::ZeroLeading);
  CHECK(kind_of(R"({"coefficients": [["1","0"],["x","0"],["2","0"]]})") == ParseErrorKind::MalformedNumber);
  CHECK(kind_of(R"({"coefficients": [["1","0"],)") == ParseErrorKind::MalformedJson);
  CHECK(kind_of(R"({"coeffs": []})") == ParseErrorKind::Schema);
}

TEST_CASE("vector round trip") {
  const std::vector<BigComplex> v{cx("1.74"), cx("-0.2", "-0.8"), cx("1e-30", "3")};
  const auto back = parse_vector(serialize_vector(v));
  REQUIRE(back.size() == v.size());
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(back[i] == v[i]);
}

TEST_CASE("known roots annihilate the polynomial") {
  for (int n : {2, 3, 7, 20, 30}) {
    const int digits = 80;
    const Polynomial f = unity_polynomial(n, digits);
    const auto roots = unity_roots(n, digits);
    for (const auto& r : roots) {
      const BigReal scale = max(BigReal(1, digits), pow(abs(r), static_cast<long>(n)));
      CHECK(abs(f.evaluate(r)) < ten_to(-(digits - 8)) * scale);
    }
    const std::vector<BigComplex> samples{cx("0.3", "0.7", digits), cx("-2", "1", digits)};
    CHECK(root_vector_defect(f, roots, samples) < ten_to(-(digits - 8)));
  }
  const auto roots = cubic_roots();
  CHECK(root_vector_defect(cubic(), roots, {cx("5"), cx("0.5", "2")}).is_zero());
}

TEST_CASE("Horner agrees with the power sum") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> digit(-99, 99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 9;
    std::vector<DecimalComplex> text;
    for (int i = 0; i <= n; ++i) {
      int re = digit(rng);
      if (i == 0 && re == 0) re = 1;
      text.push_back({std::to_string(re) + ".25", std::to_string(digit(rng)) + ".5"});
    }
    const Polynomial f(text);
    const BigComplex z = cx("0.7" + std::to_string(trial), "-1.3");
    BigComplex sum(BigReal(0)), power(BigReal(1));
    for (int i = n; i >= 0; --i) {
      sum += f.coefficients()[static_cast<std::size_t>(i)] * power;
      power *= z;
    }
    const BigComplex h = f.evaluate(z);
    CHECK(abs(h - sum) <= ten_to(-(kDefaultDigits - 6)) * max(BigReal(1), abs(sum)));
  }
}

TEST_CASE("re-materialising at higher precision keeps the decimal coefficients") {
  const Polynomial f = real_poly({"1", "0.1", "-0.3"}, 64);
  const Polynomial g = f.at_digits(500);
  CHECK(g.coefficients()[1].re() == num("0.1", 500));
  CHECK(!(g.coefficients()[1].re() == f.coefficients()[1].re().at_digits(500)));
}
