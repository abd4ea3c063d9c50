#include "wroots/driver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace wroots {

namespace {

// Certification scalars need far fewer digits than the iterates themselves.
constexpr int kCertificationDigits = 64;

BigReal power_of_ten(long exponent, int digits) {
  return pow(BigReal(10, digits), exponent);
}

// Some |W_i| is below the resolvable floor for the current precision: either
// tiny, or exactly zero although the step moved the component.
bool needs_more_precision(const std::vector<BigComplex>& w, const ApproximationVector& next,
                          const ApproximationVector& prev, const BigReal& floor) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_zero()) {
      if (!(next[i] == prev[i])) return true;
      continue;
    }
    if (abs(w[i]) < floor) return true;
  }
  return false;
}

// Componentwise |a_i - b_i| <= tol * max(1, |b_i|).
bool steps_agree(const ApproximationVector& a, const ApproximationVector& b, const BigReal& tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const BigReal scale = max(BigReal(1, kCertificationDigits), abs(b[i]));
    if (tol * scale < abs(a[i] - b[i])) return false;
  }
  return true;
}

}  // namespace

void RunConfig::validate() const {
  if (order < 1) throw DomainError("run: order N must be >= 1");
  if (tolerance.sign() <= 0) throw DomainError("run: tolerance must be > 0");
  if (max_iterations < 0) throw DomainError("run: max_iterations must be >= 0");
  precision.validate();
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Certified: return "Certified";
    case Outcome::MaxIterations: return "MaxIterations";
    case Outcome::DomainViolation: return "DomainViolation";
    case Outcome::PrecisionExhausted: return "PrecisionExhausted";
  }
  return "MaxIterations";
}

const IterationRecord* RunReport::record(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= records.size()) return nullptr;
  return &records[static_cast<std::size_t>(k)];
}

namespace {

enum class Attempt { Done, Restart };

// One pass from x0 at `digits`. Returns Restart (with `digits` raised) when the
// uncertified phase turned out to need more precision.
Attempt attempt(const Polynomial& f, const StartGenerator& x0, const RunConfig& config,
                int& digits, RunReport& report) {
  const PrecisionContext& prec = config.precision;
  const int n = f.degree();
  Polynomial fx = f.at_digits(digits);
  ApproximationVector x = x0(digits).at_digits(digits);
  const Thresholds th =
      thresholds(NormContext::make(n, config.p, std::min(digits, kCertificationDigits)));
  const BigReal tiny = power_of_ten(-prec.max_digits, kCertificationDigits);
  const BigReal huge = power_of_ten(prec.max_digits, kCertificationDigits);
  auto floor_for = [](int d) {
    return power_of_ten(-static_cast<long>(std::ceil(0.6 * d)), kCertificationDigits);
  };

  // Until the first certificate the iteration may be chaotic, so a second
  // trajectory carried at higher precision guards the working one.
  const int shadow_digits = std::min(digits + std::max(32, digits / 2), prec.max_digits);
  const bool shadowed = config.verify_steps && digits < prec.max_digits;
  std::optional<Polynomial> fs;
  std::optional<ApproximationVector> shadow;
  if (shadowed) {
    fs = f.at_digits(shadow_digits);
    shadow = x0(shadow_digits).at_digits(shadow_digits);
  }
  const BigReal shadow_tol = power_of_ten(-(digits / 2), kCertificationDigits);
  auto restart = [&](int k) {
    const int to = prec.escalate(digits);
    report.escalations.push_back({k, digits, to, true});
    digits = to;
    return Attempt::Restart;
  };

  std::vector<BigComplex> w = weierstrass_correction(fx, x);
  bool capped = false;
  for (int k = 0;; ++k) {
    Certificate cert = certify(w, x, th);
    std::optional<BigReal> eps;
    if (cert.fired()) eps = *cert.sup_bound;
    report.records.push_back(IterationRecord{k, x, std::move(cert), eps, digits});
    const IterationRecord& rec = report.records.back();

    if (report.k_stop) break;  // this was the lookahead record
    if (!report.m && rec.certificate.main_conditions()) report.m = k;
    if (report.m) shadow.reset();
    if (report.m && eps && *eps < config.tolerance) {
      report.k_stop = k;
      report.outcome = Outcome::Certified;
      if (!config.lookahead) break;
    } else if (capped) {
      report.outcome = Outcome::PrecisionExhausted;
      report.diagnostic = "corrections fell below the resolution of max_digits";
      break;
    }
    if (!report.k_stop && k >= config.max_iterations) {
      report.outcome = Outcome::MaxIterations;
      break;
    }

    const auto d = min_distances(x);
    bool runaway = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (d[i] < tiny || huge < abs(x[i])) runaway = true;
    }
    if (runaway) {
      if (!report.k_stop) report.outcome = Outcome::DomainViolation;
      report.diagnostic = "divergence safeguard at k = " + std::to_string(k);
      break;
    }

    std::optional<ApproximationVector> next;
    for (;;) {
      StepOutcome step = weierstrass_type_step(fx, x, config.order);
      if (shadow) {
        StepOutcome check = weierstrass_type_step(*fs, *shadow, config.order);
        if (step.domain_ok != check.domain_ok ||
            (step.domain_ok && !steps_agree(*step.next, *check.next, shadow_tol))) {
          return restart(k + 1);
        }
        if (check.domain_ok) shadow = std::move(check.next);
      }
      if (!step.domain_ok) {
        report.diagnostic = "x^(" + std::to_string(k) + ") left the domain at level " +
                            std::to_string(step.failed_level);
        break;
      }
      std::vector<BigComplex> w_next = weierstrass_correction(fx, *step.next);
      if (needs_more_precision(w_next, *step.next, x, floor_for(digits))) {
        if (digits < prec.max_digits) {
          if (shadow) return restart(k + 1);
          const int to = prec.escalate(digits);
          report.escalations.push_back({k + 1, digits, to, false});
          digits = to;
          fx = f.at_digits(digits);
          x = x.at_digits(digits);
          continue;
        }
        capped = true;
        report.precision_limited = true;
      }
      next = std::move(step.next);
      w = std::move(w_next);
      break;
    }
    if (!next) {
      if (report.k_stop) break;  // lookahead failed; the run itself is complete
      report.outcome = Outcome::DomainViolation;
      break;
    }
    x = std::move(*next);
  }
  return Attempt::Done;
}

}  // namespace

RunReport run(const Polynomial& f, const ApproximationVector& x0, const RunConfig& config) {
  return run(f, [&](int) { return x0; }, config);
}

RunReport run(const Polynomial& f, const StartGenerator& x0, const RunConfig& config) {
  config.validate();
  const int n = f.degree();
  if (static_cast<int>(x0(kMinDigits).size()) != n) {
    throw DomainError("run: x0 length must equal degree");
  }

  int digits = std::max(config.precision.digits, kMinDigits);
  std::vector<EscalationEvent> log;
  for (;;) {
    RunReport report;
    report.config = config;
    report.degree = n;
    report.escalations = std::move(log);
    if (attempt(f, x0, config, digits, report) == Attempt::Done) return report;
    log = std::move(report.escalations);
  }
}

BigReal true_error(const ApproximationVector& x, const std::vector<BigComplex>& roots) {
  BigReal worst(0, x.digits());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::optional<BigReal> best;
    for (const auto& r : roots) {
      BigReal dist = abs(x[i] - r);
      if (!best || dist < *best) best = std::move(dist);
    }
    if (worst < *best) worst = *best;
  }
  return worst;
}

BigReal empirical_order_of(const std::vector<BigReal>& errors) {
  std::vector<double> logs;
  for (const auto& e : errors) {
    if (e.sign() <= 0) break;
    const double l = log10(e).to_double();
    if (!logs.empty() && !(l < logs.back())) break;
    logs.push_back(l);
  }
  if (logs.size() < 3) throw DomainError("empirical order needs >= 3 decreasing positive errors");
  const std::size_t pairs = logs.size() - 1;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    mx += logs[i];
    my += logs[i + 1];
  }
  mx /= static_cast<double>(pairs);
  my /= static_cast<double>(pairs);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    sxy += (logs[i] - mx) * (logs[i + 1] - my);
    sxx += (logs[i] - mx) * (logs[i] - mx);
  }
  if (sxx <= 0) throw DomainError("empirical order: degenerate error tail");
  return BigReal::from_double(sxy / sxx);
}

BigReal empirical_order(const RunReport& report,
                        const std::optional<std::vector<BigComplex>>& roots) {
  if (!report.m) throw DomainError("empirical order: run never certified");
  std::vector<BigReal> errors;
  for (const auto& rec : report.records) {
    if (rec.k < *report.m) continue;
    BigReal e = roots ? true_error(rec.iterate, *roots)
                      : (rec.epsilon ? *rec.epsilon : BigReal(0, rec.digits));
    // Errors at the rounding floor of their own precision carry no information.
    if (e.sign() <= 0 || e < power_of_ten(-(rec.digits - 10), kCertificationDigits)) break;
    errors.push_back(std::move(e));
  }
  return empirical_order_of(errors);
}

ApproximationVector aberth_init(int n, const BigReal& r0, int digits) {
  if (n < 2) throw DomainError("aberth_init: n must be >= 2");
  if (r0.sign() <= 0) throw DomainError("aberth_init: r0 must be > 0");
  const BigReal radius = r0.at_digits(std::max(digits, r0.digits()));
  const BigReal step = pi(digits) / n;
  std::vector<BigComplex> x;
  x.reserve(static_cast<std::size_t>(n));
  for (int nu = 1; nu <= n; ++nu) {
    const BigReal theta = step * (BigReal(4 * nu - 3, digits) / 2);
    x.push_back(BigComplex::polar(radius, theta));
  }
  return ApproximationVector(std::move(x));
}

ApproximationVector random_init(int n, const BigReal& radius, std::uint64_t seed, int digits) {
  if (n < 1) throw DomainError("random_init: n must be >= 1");
  if (radius.sign() <= 0) throw DomainError("random_init: radius must be > 0");
  std::mt19937_64 rng(seed);
  // 53 random bits mapped onto [-1, 1); independent of the standard library's distributions.
  auto draw = [&]() {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return BigReal::from_double(2 * u - 1, digits) * radius;
  };
  for (;;) {
    std::vector<BigComplex> x;
    x.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      BigReal re = draw();
      BigReal im = draw();
      x.emplace_back(std::move(re), std::move(im));
    }
    try {
      return ApproximationVector(std::move(x));
    } catch (const NonDistinct&) {
      // measure-zero collision: redraw the whole vector
    }
  }
}

}  // namespace wroots
