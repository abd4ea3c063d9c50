#include "wroots/iterator.hpp"

#include <algorithm>

namespace wroots {

namespace {

void require_distinct(const std::vector<BigComplex>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) throw NonDistinct(i, j);
    }
  }
}

std::optional<std::pair<std::size_t, std::size_t>> first_collision(const std::vector<BigComplex>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

// f(x_i) / a0 for every component.
std::vector<BigComplex> monic_values(const Polynomial& f, const std::vector<BigComplex>& x) {
  std::vector<BigComplex> values;
  values.reserve(x.size());
  for (const auto& xi : x) values.push_back(f.evaluate(xi) / f.leading());
  return values;
}

}  // namespace

// Level recursion shared by the step and the level dump.
struct StepKernel {
  // Computes T^(M+1) from T^(M). Returns false if some factor x_i - T_j vanishes.
  static bool advance(const std::vector<BigComplex>& x, const std::vector<BigComplex>& monic,
                      const std::vector<BigComplex>& current, std::vector<BigComplex>& next,
                      std::uint64_t& multiplications) {
    const std::size_t n = x.size();
    BigComplex factor;
    BigComplex product;
    for (std::size_t i = 0; i < n; ++i) {
      bool first = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        factor = x[i];
        factor -= current[j];
        if (factor.is_zero()) return false;
        if (first) {
          product = factor;
          first = false;
        } else {
          product *= factor;
        }
        ++multiplications;
      }
      next[i] = x[i];
      next[i] -= monic[i] / product;
    }
    return true;
  }

  static ApproximationVector wrap(std::vector<BigComplex> v) {
    return ApproximationVector(std::move(v), ApproximationVector::Unchecked{});
  }
};

ApproximationVector::ApproximationVector(std::vector<BigComplex> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("approximation vector must be nonempty");
  require_distinct(components_);
}

int ApproximationVector::digits() const {
  int d = 0;
  for (const auto& z : components_) d = std::max(d, z.digits());
  return d;
}

ApproximationVector ApproximationVector::at_digits(int digits) const {
  std::vector<BigComplex> v;
  v.reserve(components_.size());
  for (const auto& z : components_) v.push_back(z.at_digits(digits));
  return ApproximationVector(std::move(v), Unchecked{});
}

std::vector<BigReal> min_distances(const std::vector<BigComplex>& x) {
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("min_distances needs at least two components");
  std::vector<std::optional<BigReal>> best(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      BigReal dist = norm_sq(x[i] - x[j]);
      if (dist.is_zero()) throw NonDistinct(i, j);
      if (!best[i] || dist < *best[i]) best[i] = dist;
      if (!best[j] || dist < *best[j]) best[j] = dist;
    }
  }
  std::vector<BigReal> d;
  d.reserve(n);
  for (auto& b : best) d.push_back(sqrt(*b));
  return d;
}

std::vector<BigReal> min_distances(const ApproximationVector& x) {
  return min_distances(x.components());
}

bool hash_relation(const std::vector<BigComplex>& x, const std::vector<BigComplex>& y) {
  if (x.size() != y.size()) throw DomainError("hash_relation: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (i != j && x[i] == y[j]) return false;
    }
  }
  return true;
}

std::vector<BigComplex> weierstrass_correction(const Polynomial& f, const ApproximationVector& x) {
  const std::size_t n = x.size();
  std::vector<BigComplex> w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigComplex denom = f.leading();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= (x[i] - x[j]);
    }
    w.push_back(f.evaluate(x[i]) / denom);
  }
  return w;
}

StepOutcome weierstrass_type_step(const Polynomial& f, const ApproximationVector& x, int order) {
  if (order < 0) throw DomainError("order N must be >= 0");
  const auto& xs = x.components();
  StepOutcome out;
  std::vector<BigComplex> current = xs;
  if (order > 0) {
    const std::vector<BigComplex> monic = monic_values(f, xs);
    std::vector<BigComplex> next = xs;
    for (int level = 0; level < order; ++level) {
      if (!StepKernel::advance(xs, monic, current, next, out.product_multiplications)) {
        out.failed_level = level;
        return out;
      }
      std::swap(current, next);
    }
  }
  if (first_collision(current)) {
    out.failed_level = order;
    return out;
  }
  out.correction_norms.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out.correction_norms.push_back(abs(xs[i] - current[i]));
  out.next = StepKernel::wrap(std::move(current));
  out.domain_ok = true;
  return out;
}

std::vector<std::optional<std::vector<BigComplex>>> weierstrass_type_levels(
    const Polynomial& f, const ApproximationVector& x, int order) {
  if (order < 0) throw DomainError("order N must be >= 0");
  const auto& xs = x.components();
  std::vector<std::optional<std::vector<BigComplex>>> levels(static_cast<std::size_t>(order) + 1);
  levels[0] = xs;
  const std::vector<BigComplex> monic = monic_values(f, xs);
  std::uint64_t unused = 0;
  for (int level = 0; level < order; ++level) {
    std::vector<BigComplex> next = xs;
    if (!StepKernel::advance(xs, monic, *levels[static_cast<std::size_t>(level)], next, unused)) break;
    levels[static_cast<std::size_t>(level) + 1] = std::move(next);
  }
  return levels;
}

BigReal lemma23_residual(const Polynomial& f, const ApproximationVector& x,
                         const std::vector<BigComplex>& roots, int order) {
  if (roots.size() != x.size()) throw DomainError("lemma23_residual: length mismatch");
  const auto levels = weierstrass_type_levels(f, x, order + 1);
  const auto& tn = levels[static_cast<std::size_t>(order)];
  const auto& tn1 = levels[static_cast<std::size_t>(order) + 1];
  if (!tn || !tn1) throw DomainError("lemma23_residual: x is not in D_{N+1}");
  const std::size_t n = x.size();
  BigReal worst(0, x.digits());
  for (std::size_t i = 0; i < n; ++i) {
    const BigComplex lhs = (*tn1)[i] - roots[i];
    BigComplex prod(BigReal(1, x.digits()));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const BigComplex u = ((*tn)[j] - roots[j]) / (x[i] - (*tn)[j]);
      prod *= BigComplex(BigReal(1, x.digits())) + u;
    }
    const BigComplex rhs = (BigComplex(BigReal(1, x.digits())) - prod) * (x[i] - roots[i]);
    const BigReal r = abs(lhs - rhs);
    if (worst < r) worst = r;
  }
  return worst;
}

}  // namespace wroots
