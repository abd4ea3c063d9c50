#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wroots/gauges.hpp"
#include "wroots/iterator.hpp"
#include "wroots/numeric.hpp"
#include "wroots/polynomial.hpp"

namespace wroots {

/// Semilocal convergence conditions, strongest first.
enum class Theorem { Thm32, Thm34, Cor35, Cor33, None };

std::string to_string(Theorem t);

struct Thresholds {
  BigReal mu;             // 1/(1 + sqrt a)^2
  BigReal radius_cor33;   // 2/(5a + 6)
  BigReal radius_thm34;   // R(1 - R)/(1 + (a - 1)R), R = n(2^{1/n} - 1)/(a + 2)
  BigReal radius_cor35;   // n(2^{1/n} - 1)(a + 1)/((a + 2)(2a + 1))
  BigReal R_local;        // root of Psi(t) = 2
  NormContext norm;
};

Thresholds thresholds(const NormContext& norm);

struct Certificate {
  BigReal e_value;
  /// Omega(E_f); absent when E_f exceeds mu (Omega undefined there).
  std::optional<BigReal> omega_value;
  Theorem theorem_fired = Theorem::None;
  /// Every condition satisfied, strongest first.
  std::vector<Theorem> satisfied;
  /// E_f strictly below the fired threshold.
  bool strict = false;
  /// The n = 2, p = inf case where the mu inequality must be strict.
  bool edge_case_n2_pinf = false;
  /// alpha(E_f) |W_i|, filled when fired.
  std::vector<BigReal> component_bounds;
  /// max of component_bounds (the infinity-norm a posteriori bound).
  std::optional<BigReal> sup_bound;
  NormContext norm;

  bool fired() const { return theorem_fired != Theorem::None; }
  /// Both conditions E_f <= mu and Omega(E_f) < 2 hold.
  bool main_conditions() const;
};

/// || (x - xi)/d(x) ||_p; requires the true roots.
BigReal e_local(const ApproximationVector& x, const std::vector<BigComplex>& roots,
                const NormContext& norm);

/// || W_f(x)/d(x) ||_p
BigReal e_f(const Polynomial& f, const ApproximationVector& x, const NormContext& norm);

struct AlphaH {
  BigReal alpha;
  BigReal h;
};

/// alpha(t) = 2/(1 - (a-1)t + sqrt((1 - (a-1)t)^2 - 4t)), h = t alpha(t).
/// Throws OutOfDomain when the discriminant is negative (t beyond mu).
AlphaH alpha_h(const BigReal& t, const NormContext& norm);

/// Omega(t) = Psi(h(t)).
BigReal omega_semilocal(const BigReal& t, const NormContext& norm);

/// Conditions met by a scalar value of E_f, strongest first.
std::vector<Theorem> conditions_satisfied(const BigReal& t, const Thresholds& th);

/// Evaluates E_f and every condition at x; fills the error bounds when any fires.
Certificate certify(const Polynomial& f, const ApproximationVector& x, const NormContext& norm);
/// Same, reusing a precomputed correction W_f(x) and thresholds.
Certificate certify(const std::vector<BigComplex>& correction, const ApproximationVector& x,
                    const Thresholds& th);

/// {e_f, omega, theorem, strict, bounds, sup_bound, norm: {p, n}}
std::string certificate_json(const Certificate& c, int indent = -1);

}  // namespace wroots
