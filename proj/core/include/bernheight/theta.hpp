#pragma once

#include <cstdint>
#include <vector>

#include "bernheight/rational.hpp"

namespace bernheight {

using ValuationVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

/// Symmetric positive definite g x g matrix of rationals (valuations of the periods).
class ValuationMatrix {
 public:
  /// Row-major entries. Throws std::invalid_argument unless square, symmetric and
  /// positive definite (all leading principal minors > 0).
  explicit ValuationMatrix(std::vector<std::vector<Rational>> rows);

  /// [[a, b], [b, c]].
  static ValuationMatrix from_triple(const Rational& a, const Rational& b, const Rational& c);

  std::size_t dim() const { return rows_.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  Rational determinant() const { return det_; }
  Rational trace() const;
  const std::vector<std::vector<Rational>>& inverse() const { return inverse_; }

  /// x^T Q y.
  Rational bilinear(const ValuationVector& x, const ValuationVector& y) const;
  ValuationVector apply(const ValuationVector& x) const;

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::vector<Rational>> inverse_;
  Rational det_;
};

ValuationVector to_valuation(const IntVector& n);

struct TropicalTheta {
  Rational value;         // min_m m^T Q m + m^T w
  IntVector argmin;       // lexicographically smallest minimizer
  std::size_t ties = 0;   // number of minimizers
  std::int64_t radius = 0;  // half-width of the enumerated box around -Q^{-1} w / 2
};

/// Exact tropical theta value. The enumeration box is centered at the real minimizer and
/// large enough that nothing outside it can beat the rounded-center incumbent.
TropicalTheta tropical_theta(const ValuationMatrix& Q, const ValuationVector& w);

struct ThetaTransformCheck {
  Rational lhs;  // theta(Q, w + 2 Q n)
  Rational rhs;  // theta(Q, w) - n^T Q n - n^T w
  bool equal;
};

ThetaTransformCheck check_theta_transform(const ValuationMatrix& Q, const ValuationVector& w,
                                          const IntVector& n);

struct LambdaInvarianceCheck {
  Rational delta;  // change of theta(Q, w) + (1/4) w^T Q^{-1} w under w -> w + 2 Q n
  bool zero;
};

LambdaInvarianceCheck check_lambda_invariance(const ValuationMatrix& Q, const ValuationVector& w,
                                              const IntVector& n);

}  // namespace bernheight
