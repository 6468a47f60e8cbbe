#pragma once

#include <cstdint>
#include <vector>

#include "bernheight/rational.hpp"

namespace bernheight {

/// Periodic second Bernoulli polynomial B2(x) = {x}^2 - {x} + 1/6.
Rational b2(const Rational& x);

/// (1/2 pi^2) sum_{0 < |k| <= K} e(kx) / k^2, real part.
double b2_fourier_partial(const Rational& x, std::int64_t K);

struct DistributionCheck {
  Rational lhs;  // (1/N) sum_{j<N} B2(x + j/N)
  Rational rhs;  // B2(N x) / N^2
};

DistributionCheck b2_distribution(const Rational& x, std::int64_t N);

/// A finite set of rationals with denominators dividing R, pairwise distinct mod 1.
class RationalGridSet {
 public:
  /// Throws std::invalid_argument if R < 1, a denominator does not divide R,
  /// or two elements coincide modulo 1.
  RationalGridSet(std::int64_t R, std::vector<Rational> elements);

  std::int64_t R() const { return R_; }
  const std::vector<Rational>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::int64_t R_;
  std::vector<Rational> elements_;
};

struct FejerCheck {
  Rational average;  // mean of B2(s - t) over ordered pairs s != t
  Rational bound;    // 1/(6R^2) - 1/(6(N-1))
  bool holds;
};

/// Throws std::invalid_argument when the set has fewer than two elements.
FejerCheck fejer_lower_bound(const RationalGridSet& T);

/// The pair average rewritten through character sums, truncated at |k| <= K:
///   (1 / (2 pi^2 (N^2 - N))) sum_{0<|k|<=K} (|sum_t e(kt)|^2 - N) / k^2.
double fejer_character_sum(const RationalGridSet& T, std::int64_t K);

}  // namespace bernheight
