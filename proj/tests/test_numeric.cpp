#include <random>

#include "doctest.h"
#include "support.hpp"
#include "wroots/numeric.hpp"

using namespace wroots;
using namespace wroots::test;

TEST_CASE("p_norm") {
  const std::vector<BigReal> v{BigReal(3), BigReal(4)};
  CHECK(p_norm(v, Exponent::finite(BigReal(2))) == 5);
  CHECK(p_norm(v, Exponent::infinity()) == 4);

  const std::vector<BigReal> d{num("0.01"), num("0.01"), num("5.23")};
  CHECK(p_norm(d, Exponent::infinity()) == num("5.23"));

  CHECK_THROWS_AS(p_norm(std::vector<BigReal>{}, Exponent::infinity()), DomainError);
  CHECK_THROWS_AS(p_norm(std::vector<BigReal>{BigReal(-1)}, Exponent::infinity()), DomainError);
}

TEST_CASE("p_norm is nonincreasing in p and bracketed by the max norm") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  const std::vector<Exponent> ps{Exponent::finite(BigReal(1)), Exponent::finite(BigReal(2)),
                                 Exponent::finite(BigReal(4)), Exponent::infinity()};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigReal> v;
    const int n = 2 + trial % 9;
    for (int i = 0; i < n; ++i) v.push_back(BigReal::from_double(u(rng)));
    const BigReal inf_norm = p_norm(v, Exponent::infinity());
    const BigReal slack = ten_to(-55);
    for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
      CHECK(p_norm(v, ps[k + 1]) <= p_norm(v, ps[k]) + slack);
      const BigReal& p = ps[k].value();
      CHECK(inf_norm <= p_norm(v, ps[k]) + slack);
      CHECK(p_norm(v, ps[k]) <= pow(BigReal(n), BigReal(1) / p) * inf_norm + slack);
    }
  }
}

TEST_CASE("conjugate exponent") {
  CHECK(conjugate_exponent(Exponent::infinity()) == Exponent::finite(BigReal(1)));
  CHECK(conjugate_exponent(Exponent::finite(BigReal(1))).is_infinite());
  CHECK(conjugate_exponent(Exponent::finite(BigReal(2))) == Exponent::finite(BigReal(2)));
  CHECK(close(conjugate_exponent(Exponent::finite(BigReal(3))).value(), "1.5", -60));
  CHECK_THROWS_AS(Exponent::finite(num("0.5")), DomainError);
  CHECK_THROWS_AS(Exponent::parse("abc"), DomainError);
  CHECK(Exponent::parse("inf").is_infinite());
  CHECK(Exponent::parse("infinity").is_infinite());
}

TEST_CASE("capacity_a") {
  CHECK(capacity_a(3, Exponent::finite(BigReal(1))) == 2);
  CHECK(capacity_a(20, Exponent::finite(BigReal(1))) == 19);
  CHECK(close(capacity_a(5, Exponent::finite(BigReal(2))), "2", -60));
  CHECK(capacity_a(7, Exponent::infinity()) == 1);
  CHECK_THROWS_AS(capacity_a(1, Exponent::infinity()), DomainError);

  const NormContext ctx = NormContext::make(20, Exponent::infinity());
  CHECK(ctx.q == Exponent::finite(BigReal(1)));
  CHECK(ctx.a == 19);
  CHECK(ctx.n1_root_p == 1);
}

TEST_CASE("decimal parsing is exact at the declared precision") {
  const BigReal a = num("0.1", 200);
  CHECK(a.digits() >= 200);
  CHECK(num(a.to_string(), 200) == a);
  CHECK(num("1.74", 64) * num("1.74", 64) == num("3.0276", 64));
  CHECK(num("-2.5e-3") == num("-0.0025"));
  CHECK_THROWS_AS(num("1.2.3"), ParseError);
  CHECK_THROWS_AS(num(""), ParseError);
  CHECK_THROWS_AS(num("12abc"), ParseError);
}

TEST_CASE("fixed and scientific rendering") {
  const BigReal x = num("1.1317025999");
  CHECK(x.to_fixed(6) == "1.131703");
  CHECK(x.to_fixed(6, Rounding::TowardZero) == "1.131702");
  const BigReal e = num("3.3114889e-2");
  CHECK(e.to_scientific(7, Rounding::TowardZero).str() == "3.311488e-2");
  CHECK(e.to_scientific(7).str() == "3.311489e-2");
  CHECK(num("-7.5e-12345", 100).to_scientific(4).str() == "-7.500e-12345");
  CHECK(num("123.45").decimal_exponent() == 2);
  CHECK(num("0.00999").decimal_exponent() == -3);
}

TEST_CASE("complex arithmetic") {
  const BigComplex a = cx("1", "2"), b = cx("3", "-1");
  CHECK(a * b == cx("5", "5"));
  CHECK(a + b == cx("4", "1"));
  CHECK(a - b == cx("-2", "3"));
  CHECK(abs((a * b) / b - a) < ten_to(-60));
  CHECK(norm_sq(cx("3", "4")) == 25);
  CHECK(abs(cx("3", "4")) == 5);
  CHECK_THROWS_AS(a / cx("0", "0"), DomainError);
  const BigComplex z = BigComplex::polar(BigReal(2), pi(64) / 2);
  CHECK(abs(z - cx("0", "2")) < ten_to(-60));
}

TEST_CASE("results at doubled precision agree to the working precision") {
  for (const char* s : {"2", "0.37", "12345.678"}) {
    const BigReal lo = num(s, 64), hi = num(s, 128);
    CHECK(abs(sqrt(lo) - sqrt(hi)) / sqrt(hi) < ten_to(-62));
    CHECK(abs(exp(lo) - exp(hi)) / exp(hi) < ten_to(-62));
    CHECK(abs(log(lo) - log(hi)) / abs(log(hi)) < ten_to(-62));
    CHECK(abs(pow(lo, num("0.3", 64)) - pow(hi, num("0.3", 128))) / pow(hi, num("0.3", 128)) <
          ten_to(-62));
  }
  CHECK(abs(sin(pi(64)) - sin(pi(128))) < ten_to(-62));
}

TEST_CASE("precision context") {
  PrecisionContext ok;
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.escalate(64) == 128);
  CHECK(ok.escalate(1500) == 2000);

  PrecisionContext low{.digits = 16};
  CHECK_THROWS_AS(low.validate(), DomainError);
  PrecisionContext inverted{.digits = 100, .max_digits = 50};
  CHECK_THROWS_AS(inverted.validate(), DomainError);
  PrecisionContext flat{.escalation_factor = 1.0};
  CHECK_THROWS_AS(flat.validate(), DomainError);
  CHECK(digits_to_bits(100) >= 333);
}
