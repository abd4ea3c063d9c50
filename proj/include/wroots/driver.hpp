#pragma once

// Iteration driver: runs x^(k+1) = T^(N)(x^(k)), certifies every iterate,
// locates the first certified index m and the stopping index k, and
// escalates the working precision when corrections approach the rounding
// floor.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wroots/certifier.hpp"
#include "wroots/iterator.hpp"
#include "wroots/numeric.hpp"
#include "wroots/polynomial.hpp"

namespace wroots {

struct RunConfig {
  int order = 1;
  Exponent p = Exponent::infinity();
  BigReal tolerance = BigReal::parse("1e-15");
  int max_iterations = 1000;
  PrecisionContext precision;
  bool capture_trajectory = false;
  /// Also compute and certify x^(k+1) after the stopping index.
  bool lookahead = true;
  /// Until the first certificate, carry a second trajectory at higher precision and
  /// restart from x0 at escalated precision when the two disagree beyond half the
  /// working digits.
  bool verify_steps = true;

  void validate() const;
};

struct IterationRecord {
  int k = 0;
  ApproximationVector iterate;
  Certificate certificate;
  /// Present iff the certificate fired.
  std::optional<BigReal> epsilon;
  int digits = 0;

  const BigReal& e_f() const { return certificate.e_value; }
};

enum class Outcome { Certified, MaxIterations, DomainViolation, PrecisionExhausted };

std::string to_string(Outcome o);

struct EscalationEvent {
  int k = 0;  // index of the iterate being produced
  int from_digits = 0;
  int to_digits = 0;
  /// The run was restarted from x0 at to_digits.
  bool restart = false;
};

struct RunReport {
  RunConfig config;
  int degree = 0;
  std::vector<IterationRecord> records;
  std::optional<int> m;
  std::optional<int> k_stop;
  Outcome outcome = Outcome::MaxIterations;
  std::optional<BigReal> empirical_order;
  std::vector<EscalationEvent> escalations;
  /// Set when max_digits capped an escalation that was still needed.
  bool precision_limited = false;
  std::string diagnostic;

  const IterationRecord* record(int k) const;
};

/// Produces x0 at a requested number of digits; restarts regenerate it rather than pad it.
using StartGenerator = std::function<ApproximationVector(int digits)>;

RunReport run(const Polynomial& f, const StartGenerator& x0, const RunConfig& config);
/// x0 is taken as exact at its own precision.
RunReport run(const Polynomial& f, const ApproximationVector& x0, const RunConfig& config);

/// Least-squares slope of log e_{k+1} against log e_k over the certified tail.
/// Uses true errors against `roots` when given, otherwise epsilon_k.
/// Throws DomainError when fewer than three usable decreasing errors exist.
BigReal empirical_order(const RunReport& report,
                        const std::optional<std::vector<BigComplex>>& roots = std::nullopt);

/// Slope over an explicit error sequence (positive, strictly decreasing).
BigReal empirical_order_of(const std::vector<BigReal>& errors);

/// max_i min_j |x_i - xi_j|
BigReal true_error(const ApproximationVector& x, const std::vector<BigComplex>& roots);

/// x_nu = r0 exp(i theta_nu), theta_nu = (pi/n)(2 nu - 3/2), nu = 1..n.
ApproximationVector aberth_init(int n, const BigReal& r0, int digits = kDefaultDigits);

/// Components uniform on [-radius, radius]^2, deterministic in seed.
ApproximationVector random_init(int n, const BigReal& radius, std::uint64_t seed,
                                int digits = kDefaultDigits);

}  // namespace wroots
