#include "wroots/certifier.hpp"

#include <algorithm>

#include "json.hpp"

namespace wroots {

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::Thm32: return "Thm32";
    case Theorem::Thm34: return "Thm34";
    case Theorem::Cor35: return "Cor35";
    case Theorem::Cor33: return "Cor33";
    case Theorem::None: return "None";
  }
  return "None";
}

Thresholds thresholds(const NormContext& norm) {
  const int d = norm.digits;
  const BigReal& a = norm.a;
  const BigReal one(1, d);
  const BigReal two(2, d);
  const BigReal spread = norm.n * (pow(two, one / norm.n) - 1);  // n(2^{1/n} - 1)

  Thresholds th{.mu = one / pow(sqrt(a) + 1, 2L),
                .radius_cor33 = two / (5 * a + 6),
                .radius_thm34 = BigReal(0, d),
                .radius_cor35 = spread * (a + 1) / ((a + 2) * (2 * a + 1)),
                .R_local = solve_R(norm),
                .norm = norm};
  const BigReal r = spread / (a + 2);
  th.radius_thm34 = r * (1 - r) / ((a - 1) * r + 1);
  return th;
}

bool Certificate::main_conditions() const {
  return std::find(satisfied.begin(), satisfied.end(), Theorem::Thm32) != satisfied.end();
}

BigReal e_local(const ApproximationVector& x, const std::vector<BigComplex>& roots,
                const NormContext& norm) {
  if (roots.size() != x.size()) throw DomainError("e_local: length mismatch");
  const auto d = min_distances(x);
  std::vector<BigReal> ratios;
  ratios.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) ratios.push_back(abs(x[i] - roots[i]) / d[i]);
  return p_norm(ratios, norm.p);
}

namespace {

BigReal e_f_from(const std::vector<BigComplex>& w, const std::vector<BigReal>& d,
                 const NormContext& norm) {
  std::vector<BigReal> ratios;
  ratios.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) ratios.push_back(abs(w[i]) / d[i]);
  return p_norm(ratios, norm.p);
}

bool strict_mu_required(const NormContext& norm) { return norm.n == 2 && norm.p.is_infinite(); }

}  // namespace

BigReal e_f(const Polynomial& f, const ApproximationVector& x, const NormContext& norm) {
  return e_f_from(weierstrass_correction(f, x), min_distances(x), norm);
}

AlphaH alpha_h(const BigReal& t, const NormContext& norm) {
  if (t.sign() < 0) throw OutOfDomain("alpha: t must be >= 0");
  const BigReal base = 1 - (norm.a - 1) * t;
  BigReal disc = base * base - 4 * t;
  if (disc.sign() < 0) {
    // t = mu rounded: the discriminant vanishes up to the working precision.
    const int d = std::min(t.digits(), norm.digits);
    if (pow(BigReal(10, d), static_cast<long>(-(d - 4))) < abs(disc)) {
      throw OutOfDomain("alpha: negative discriminant (t exceeds mu)");
    }
    disc = BigReal(0, d);
  }
  BigReal alpha = 2 / (base + sqrt(disc));
  BigReal h = t * alpha;
  return {std::move(alpha), std::move(h)};
}

BigReal omega_semilocal(const BigReal& t, const NormContext& norm) {
  return psi_big(alpha_h(t, norm).h, norm);
}

std::vector<Theorem> conditions_satisfied(const BigReal& t, const Thresholds& th) {
  std::vector<Theorem> out;
  const bool below_mu = strict_mu_required(th.norm) ? (t < th.mu) : (t <= th.mu);
  if (below_mu && omega_semilocal(t, th.norm) < 2) out.push_back(Theorem::Thm32);
  if (t < th.radius_thm34) out.push_back(Theorem::Thm34);
  if (t <= th.radius_cor35) out.push_back(Theorem::Cor35);
  if (t <= th.radius_cor33) out.push_back(Theorem::Cor33);
  return out;
}

Certificate certify(const Polynomial& f, const ApproximationVector& x, const NormContext& norm) {
  return certify(weierstrass_correction(f, x), x, thresholds(norm));
}

Certificate certify(const std::vector<BigComplex>& correction, const ApproximationVector& x,
                    const Thresholds& th) {
  Certificate c;
  c.norm = th.norm;
  c.edge_case_n2_pinf = strict_mu_required(th.norm);
  c.e_value = e_f_from(correction, min_distances(x), th.norm);
  if (c.e_value <= th.mu) c.omega_value = omega_semilocal(c.e_value, th.norm);
  c.satisfied = conditions_satisfied(c.e_value, th);
  if (c.satisfied.empty()) return c;

  c.theorem_fired = c.satisfied.front();
  switch (c.theorem_fired) {
    case Theorem::Thm32: c.strict = c.e_value < th.mu; break;
    case Theorem::Thm34: c.strict = true; break;
    case Theorem::Cor35: c.strict = c.e_value < th.radius_cor35; break;
    case Theorem::Cor33: c.strict = c.e_value < th.radius_cor33; break;
    case Theorem::None: break;
  }
  const BigReal alpha = alpha_h(c.e_value, th.norm).alpha;
  c.component_bounds.reserve(correction.size());
  BigReal sup(0, th.norm.digits);
  for (const auto& w : correction) {
    c.component_bounds.push_back(alpha * abs(w));
    if (sup < c.component_bounds.back()) sup = c.component_bounds.back();
  }
  c.sup_bound = std::move(sup);
  return c;
}

std::string certificate_json(const Certificate& c, int indent) {
  using nlohmann::json;
  json doc;
  doc["e_f"] = c.e_value.to_string();
  doc["omega"] = c.omega_value ? json(c.omega_value->to_string()) : json(nullptr);
  doc["theorem"] = to_string(c.theorem_fired);
  json satisfied = json::array();
  for (auto t : c.satisfied) satisfied.push_back(to_string(t));
  doc["satisfied"] = satisfied;
  doc["strict"] = c.strict;
  doc["edge_case_n2_pinf"] = c.edge_case_n2_pinf;
  json bounds = json::array();
  for (const auto& b : c.component_bounds) bounds.push_back(b.to_string());
  doc["bounds"] = bounds;
  doc["sup_bound"] = c.sup_bound ? json(c.sup_bound->to_string()) : json(nullptr);
  doc["norm"] = {{"p", c.norm.p.str()}, {"n", c.norm.n}};
  return doc.dump(indent);
}

}  // namespace wroots
