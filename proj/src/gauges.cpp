#include "wroots/gauges.hpp"

namespace wroots {

namespace {

void require_in_unit_gauge(const BigReal& t, const GaugeContext& ctx, const char* what) {
  if (t.sign() < 0 || ctx.R < t) {
    throw OutOfDomain(std::string(what) + ": argument outside [0, R]");
  }
}

// (1 + s/(n-1)^{1/p})^{n-1}
BigReal omega_of_scaled(const BigReal& s, const NormContext& norm) {
  return pow(s / norm.n1_root_p + 1, static_cast<long>(norm.n - 1));
}

BigReal tolerance(int digits) {
  return pow(BigReal(10, digits), static_cast<long>(-(digits - 8)));
}

}  // namespace

GaugeContext GaugeContext::make(int n, const Exponent& p, int digits) {
  return make(NormContext::make(n, p, digits));
}

GaugeContext GaugeContext::make(const NormContext& norm) {
  return GaugeContext{norm, solve_R(norm), norm.digits};
}

BigReal psi_big(const BigReal& t, const NormContext& norm) {
  if (t.sign() < 0) throw DomainError("Psi: t must be >= 0");
  return (2 * t + 1) * omega_of_scaled(t, norm);
}

BigReal r_lower_bound(const NormContext& norm) {
  const BigReal two(2, norm.digits);
  const BigReal root2 = pow(two, BigReal(1, norm.digits) / norm.n);
  return norm.n * (root2 - 1) / (norm.a + 2);
}

BigReal solve_R(const NormContext& norm) {
  BigReal lo = r_lower_bound(norm);
  BigReal hi = BigReal(1, norm.digits) / 2;
  const BigReal tol = tolerance(norm.digits);
  // Bracket guaranteed by Psi(lo) < 2 < Psi(1/2); bisection halves it each pass.
  const long max_iterations = static_cast<long>(digits_to_bits(norm.digits)) + 64;
  BigReal mid = (lo + hi) / 2;
  for (long it = 0; it < max_iterations; ++it) {
    mid = (lo + hi) / 2;
    const BigReal value = psi_big(mid, norm) - 2;
    if (abs(value) < tol) break;
    if (value.sign() < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

OmegaPhi omega_phi(const BigReal& t, const GaugeContext& ctx) {
  require_in_unit_gauge(t, ctx, "phi");
  BigReal omega = omega_of_scaled(t, ctx.norm);
  const BigReal denom = 1 - 2 * t * omega;
  if (denom.sign() <= 0) throw OutOfDomain("phi: 1 - 2 t omega(t) <= 0");
  BigReal phi = (omega - 1) / denom;
  return {std::move(omega), std::move(phi)};
}

PhiFamily phi_family(const BigReal& t, int order, const GaugeContext& ctx) {
  if (order < 0) throw DomainError("phi_N: N must be >= 0");
  require_in_unit_gauge(t, ctx, "phi_N");
  BigReal phi(1, ctx.digits);
  BigReal omega = omega_of_scaled(t * phi, ctx.norm);
  for (int level = 0; level < order; ++level) {
    const BigReal denom = 1 - 2 * t * omega;
    if (denom.sign() <= 0) throw OutOfDomain("phi_N: 1 - 2 t omega_N(t) <= 0");
    phi = (omega - 1) / denom;
    omega = omega_of_scaled(t * phi, ctx.norm);
  }
  return {std::move(phi), std::move(omega)};
}

BetaPsi beta_psi(const BigReal& t, int order, const GaugeContext& ctx) {
  if (order < 1) throw DomainError("beta_N/psi_N: N must be >= 1");
  const PhiFamily prev = phi_family(t, order - 1, ctx);
  return {prev.omega - 1, 1 - 2 * t * prev.omega};
}

BigReal varphi(const BigReal& t, int order, const GaugeContext& ctx) {
  return t * phi_family(t, order, ctx).phi;
}

BigReal LocalRateFactors::step_factor(int k) const {
  const BigReal growth = pow(BigReal(order_ + 1, lambda_.digits()), static_cast<long>(k));
  return theta_ * pow(lambda_, growth);
}

BigReal LocalRateFactors::cumulative_factor(int k) const {
  const BigReal growth = pow(BigReal(order_ + 1, lambda_.digits()), static_cast<long>(k));
  return pow(theta_, static_cast<long>(k)) * pow(lambda_, (growth - 1) / order_);
}

BigReal LocalRateFactors::simple_step_factor(int k) const {
  const BigReal growth = pow(BigReal(order_ + 1, lambda_.digits()), static_cast<long>(k));
  return pow(lambda_tilde_, growth * order_);
}

BigReal LocalRateFactors::simple_cumulative_factor(int k) const {
  const BigReal growth = pow(BigReal(order_ + 1, lambda_.digits()), static_cast<long>(k));
  return pow(lambda_tilde_, growth - 1);
}

LocalRateFactors local_rate_factors(const BigReal& e0, int order, const GaugeContext& ctx) {
  if (order < 1) throw DomainError("local rate factors need N >= 1");
  require_in_unit_gauge(e0, ctx, "local_rate_factors");
  BigReal lambda = phi_family(e0, order, ctx).phi;
  BigReal theta = beta_psi(e0, order, ctx).psi;
  BigReal lambda_tilde = omega_phi(e0, ctx).phi;
  return LocalRateFactors(std::move(lambda), std::move(theta), std::move(lambda_tilde), order);
}

BigReal proof_gauge_g(const BigReal& t) {
  if (t.sign() < 0) throw DomainError("g: t must be >= 0");
  return 4 / (3 * t + 8 + sqrt(9 * t * t + 8 * t + 16));
}

BigReal proof_gauge_G(const BigReal& t) {
  const BigReal g = proof_gauge_g(t);
  return (2 * g + 1) * exp(t * g);
}

}  // namespace wroots
