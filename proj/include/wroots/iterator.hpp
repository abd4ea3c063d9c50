#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wroots/numeric.hpp"
#include "wroots/polynomial.hpp"

namespace wroots {

/// Vector of n complex approximations with pairwise distinct components.
class ApproximationVector {
 public:
  /// Throws NonDistinct if two components are equal.
  explicit ApproximationVector(std::vector<BigComplex> components);

  std::size_t size() const { return components_.size(); }
  const BigComplex& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<BigComplex>& components() const { return components_; }
  int digits() const;
  ApproximationVector at_digits(int digits) const;

 private:
  struct Unchecked {};
  ApproximationVector(std::vector<BigComplex> components, Unchecked)
      : components_(std::move(components)) {}
  friend struct StepKernel;

  std::vector<BigComplex> components_;
};

/// Result of one application of the order-(N+1) Weierstrass-type operator.
struct StepOutcome {
  std::optional<ApproximationVector> next;
  /// |x_i - T_i(x)|, filled only when domain_ok.
  std::vector<BigReal> correction_norms;
  bool domain_ok = false;
  /// Level M whose relation x # T^(M)(x) failed (x is not in D_{M+1}); -1 if none.
  int failed_level = -1;
  /// Number of factor multiplications in the products prod_{j != i}(x_i - T_j).
  std::uint64_t product_multiplications = 0;
};

/// d_i(x) = min_{j != i} |x_i - x_j|. Throws NonDistinct on duplicates.
std::vector<BigReal> min_distances(const std::vector<BigComplex>& x);
std::vector<BigReal> min_distances(const ApproximationVector& x);

/// x # y: x_i != y_j for all i != j. Throws DomainError on length mismatch.
bool hash_relation(const std::vector<BigComplex>& x, const std::vector<BigComplex>& y);

/// W_i(x) = f(x_i) / (a0 prod_{j != i}(x_i - x_j)).
std::vector<BigComplex> weierstrass_correction(const Polynomial& f, const ApproximationVector& x);

/// T^(N)(x), evaluated level by level on the monic normalisation f / a0.
/// Throws NonDistinct only through ApproximationVector construction of the input;
/// a failed # relation is reported through domain_ok / failed_level.
StepOutcome weierstrass_type_step(const Polynomial& f, const ApproximationVector& x, int order);

/// All levels T^(0)(x) .. T^(N)(x); empty optional entries past a domain failure.
std::vector<std::optional<std::vector<BigComplex>>> weierstrass_type_levels(
    const Polynomial& f, const ApproximationVector& x, int order);

/// max_i |(T^(N+1)_i(x) - xi_i) - (1 - prod_{j != i}(1 + u_j))(x_i - xi_i)| with
/// u_j = (T^(N)_j(x) - xi_j) / (x_i - T^(N)_j(x)). Test oracle only.
BigReal lemma23_residual(const Polynomial& f, const ApproximationVector& x,
                         const std::vector<BigComplex>& roots, int order);

}  // namespace wroots
