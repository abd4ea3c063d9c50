#pragma once

// Scalar gauge machinery for the local convergence theory of the
// Weierstrass-type family: Psi and its root R, omega/phi, the recursive
// families phi_N / omega_N, beta_N, psi_N, varphi_N and the rate factors
// lambda, theta of the local error estimates.

#include "wroots/numeric.hpp"

namespace wroots {

/// Norm data plus R, the unique positive root of Psi(t) = 2.
struct GaugeContext {
  NormContext norm;
  BigReal R;
  int digits = kDefaultDigits;

  static GaugeContext make(int n, const Exponent& p, int digits = kDefaultDigits);
  static GaugeContext make(const NormContext& norm);
};

/// Psi(t) = (1 + 2t)(1 + t/(n-1)^{1/p})^{n-1}, t >= 0.
BigReal psi_big(const BigReal& t, const NormContext& norm);

/// Lower end of the bracket for R: n(2^{1/n} - 1)/((n-1)^{1/q} + 2).
BigReal r_lower_bound(const NormContext& norm);

/// Bisection on [r_lower_bound, 1/2] until |Psi(R) - 2| < 10^{-(digits-8)}.
BigReal solve_R(const NormContext& norm);

struct OmegaPhi {
  BigReal omega;
  BigReal phi;
};

/// omega(t) = (1 + t/(n-1)^{1/p})^{n-1}; phi(t) = (omega - 1)/(1 - 2 t omega), t in [0, R].
OmegaPhi omega_phi(const BigReal& t, const GaugeContext& ctx);

struct PhiFamily {
  BigReal phi;    // phi_N(t)
  BigReal omega;  // omega_N(t)
};

/// phi_0 = 1, phi_{N+1} = (omega_N - 1)/(1 - 2 t omega_N),
/// omega_N = (1 + t phi_N/(n-1)^{1/p})^{n-1}; t in [0, R].
PhiFamily phi_family(const BigReal& t, int order, const GaugeContext& ctx);

struct BetaPsi {
  BigReal beta;  // omega_{N-1}(t) - 1
  BigReal psi;   // 1 - 2 t omega_{N-1}(t)
};

BetaPsi beta_psi(const BigReal& t, int order, const GaugeContext& ctx);

/// t * phi_N(t), mapping [0, R] into itself.
BigReal varphi(const BigReal& t, int order, const GaugeContext& ctx);

/// lambda = phi_N(E0), theta = psi_N(E0) and the derived local error factors.
class LocalRateFactors {
 public:
  LocalRateFactors(BigReal lambda, BigReal theta, BigReal lambda_tilde, int order)
      : lambda_(std::move(lambda)),
        theta_(std::move(theta)),
        lambda_tilde_(std::move(lambda_tilde)),
        order_(order) {}

  const BigReal& lambda() const { return lambda_; }
  const BigReal& theta() const { return theta_; }
  /// phi(E0), the rate of the simplified estimates.
  const BigReal& lambda_tilde() const { return lambda_tilde_; }
  int order() const { return order_; }

  /// theta * lambda^{(N+1)^k}: bound on |x^(k+1) - xi| / |x^(k) - xi|.
  BigReal step_factor(int k) const;
  /// theta^k * lambda^{((N+1)^k - 1)/N}: bound on |x^(k) - xi| / |x^(0) - xi|.
  BigReal cumulative_factor(int k) const;
  /// lambda_tilde^{N (N+1)^k}
  BigReal simple_step_factor(int k) const;
  /// lambda_tilde^{(N+1)^k - 1}
  BigReal simple_cumulative_factor(int k) const;

 private:
  BigReal lambda_;
  BigReal theta_;
  BigReal lambda_tilde_;
  int order_;
};

/// Requires E0 in [0, R] and N >= 1.
LocalRateFactors local_rate_factors(const BigReal& e0, int order, const GaugeContext& ctx);

/// g(t) = 4/(3t + 8 + sqrt(9t^2 + 8t + 16))
BigReal proof_gauge_g(const BigReal& t);
/// G(t) = (1 + 2 g(t)) exp(t g(t)); stays below 2 on [0, inf).
BigReal proof_gauge_G(const BigReal& t);

}  // namespace wroots
