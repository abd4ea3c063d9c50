#include "wroots/polynomial.hpp"

#include "json.hpp"

namespace wroots {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::MalformedJson, e.what());
  }
}

std::vector<DecimalComplex> read_pairs(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array()) {
    throw ParseError(ParseErrorKind::Schema, std::string("expected object with array '") + key + "'");
  }
  std::vector<DecimalComplex> out;
  for (const auto& entry : doc.at(key)) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string()) {
      throw ParseError(ParseErrorKind::Schema,
                       std::string("'") + key + "' entries must be [re_string, im_string]");
    }
    out.push_back({entry[0].get<std::string>(), entry[1].get<std::string>()});
  }
  return out;
}

json write_pairs(const std::vector<DecimalComplex>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) arr.push_back({p[0], p[1]});
  return arr;
}

}  // namespace

Polynomial::Polynomial(std::vector<DecimalComplex> coefficients, int digits)
    : text_(std::move(coefficients)), digits_(digits) {
  if (text_.size() < 3) {
    throw ParseError(ParseErrorKind::DegreeTooSmall, "polynomial degree must be >= 2");
  }
  coefficients_.reserve(text_.size());
  for (const auto& c : text_) coefficients_.push_back(BigComplex::parse(c[0], c[1], digits));
  if (coefficients_.front().is_zero()) {
    throw ParseError(ParseErrorKind::ZeroLeading, "leading coefficient must be nonzero");
  }
}

BigComplex Polynomial::evaluate(const BigComplex& z) const {
  BigComplex acc = coefficients_.front();
  if (acc.bits() < z.bits()) acc = acc.at_digits(z.digits());
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    acc *= z;
    acc += coefficients_[i];
  }
  return acc;
}

Polynomial unity_polynomial(int n, int digits) {
  std::vector<DecimalComplex> c(static_cast<std::size_t>(n) + 1, DecimalComplex{"0", "0"});
  c.front() = {"1", "0"};
  c.back() = {"-1", "0"};
  return Polynomial(std::move(c), digits);
}

std::vector<BigComplex> unity_roots(int n, int digits) {
  std::vector<BigComplex> roots;
  const BigReal two_pi = pi(digits) * 2;
  const BigReal one(1, digits);
  for (int k = 0; k < n; ++k) roots.push_back(BigComplex::polar(one, two_pi * k / n));
  return roots;
}

Polynomial parse_polynomial(std::string_view json_text, int digits) {
  return Polynomial(read_pairs(parse_json(json_text), "coefficients"), digits);
}

std::string serialize_polynomial(const Polynomial& f) {
  json doc;
  doc["coefficients"] = write_pairs(f.decimal_coefficients());
  return doc.dump();
}

std::vector<BigComplex> parse_vector(std::string_view json_text, int digits) {
  std::vector<BigComplex> v;
  for (const auto& p : read_pairs(parse_json(json_text), "components")) {
    v.push_back(BigComplex::parse(p[0], p[1], digits));
  }
  if (v.empty()) throw ParseError(ParseErrorKind::Schema, "vector must be nonempty");
  return v;
}

std::string serialize_vector(const std::vector<BigComplex>& v) {
  std::vector<DecimalComplex> pairs;
  pairs.reserve(v.size());
  for (const auto& z : v) pairs.push_back({z.re().to_string(), z.im().to_string()});
  json doc;
  doc["components"] = write_pairs(pairs);
  return doc.dump();
}

BigReal root_vector_defect(const Polynomial& f, const std::vector<BigComplex>& roots,
                           const std::vector<BigComplex>& samples) {
  BigReal worst(0, f.digits());
  for (const auto& z : samples) {
    const BigComplex fz = f.evaluate(z);
    BigComplex prod = f.leading();
    for (const auto& r : roots) prod *= (z - r);
    const BigReal scale = max(BigReal(1, f.digits()), abs(fz));
    const BigReal defect = abs(fz - prod) / scale;
    if (worst < defect) worst = defect;
  }
  return worst;
}

}  // namespace wroots
