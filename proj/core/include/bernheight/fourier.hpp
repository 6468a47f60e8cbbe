#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "bernheight/periodic_form.hpp"
#include "bernheight/quadform.hpp"
#include "bernheight/rational.hpp"

namespace bernheight {

/// Which closed form applies to the index (m, n). Decided on exact integers.
enum class CoefficientCase { ZeroIndex, F1Zero, F2Zero, F3Zero, Generic };

std::string_view to_string(CoefficientCase c);

/// Fourier coefficient of L at (m, n):
///   value = prefactor * trig / pi^pi_power,
/// where trig = sin(pi F0 / D) in the generic case and 1 otherwise.
struct FourierCoefficient {
  std::int64_t m = 0;
  std::int64_t n = 0;
  double value = 0.0;
  CoefficientCase case_tag = CoefficientCase::ZeroIndex;
  Rational prefactor;
  int pi_power = 0;
};

CoefficientCase classify_index(const QuadTriple& t, std::int64_t m, std::int64_t n);

/// Lhat(0,0), the mean of L over the torus:
///   ((a + c)(ac - 2b^2) + 2b^3) / (12 D) = (a^2 c + a c^2 - 2a b^2 - 2b^2 c + 2b^3) / (12 D).
Rational zero_coefficient(const QuadTriple& t);

/// Closed-form coefficient:
///   (0,0):   zero_coefficient(t)
///   F1 = 0:  (-1)^n alpha c^2 / (2 pi^2 D n^2)
///   F2 = 0:  (-1)^m gamma a^2 / (2 pi^2 D m^2)
///   F3 = 0:  (-1)^(m+n+1) alpha gamma b / (2 pi^2 D m n)
///   else:    D^2 sin(2 pi F0 / 2D) / (2 pi^3 F1 F2 F3)
FourierCoefficient coefficient(const NormalizedTriple& t, std::int64_t m, std::int64_t n);

/// Just the value of coefficient(t, m, n), without building the exact prefactor.
double coefficient_value(const NormalizedTriple& t, std::int64_t m, std::int64_t n);

/// The generic-case formula rewritten so the sine argument is alpha F1 / 2D (variant 1),
/// gamma F2 / 2D (variant 2) or b F3 / 2D (variant 3).
/// Throws std::invalid_argument on a degenerate index or an unknown variant.
double coefficient_alternate(const NormalizedTriple& t, std::int64_t m, std::int64_t n, int variant);

/// Generic-case formula for real parameters (a, b, c); used to probe limits.
double coefficient_generic_real(double a, double b, double c, std::int64_t m, std::int64_t n);

/// L sampled at the midpoints of a 2^k x 2^k grid on the centered square.
/// Independent of the closed forms: it only evaluates the minimum over translates.
class QuadratureGrid {
 public:
  QuadratureGrid(const NormalizedTriple& t, int grid_exponent);

  int grid_exponent() const { return exponent_; }
  std::size_t size() const { return n_; }

  /// Midpoint rule for the double integral of L(x,y) cos(2 pi (m x + n y)).
  double coefficient(std::int64_t m, std::int64_t n) const;

  /// All coefficients with |m|, |n| <= M, row-major in (m + M, n + M).
  std::vector<double> coefficients(std::int64_t M) const;

 private:
  int exponent_;
  std::size_t n_;
  std::vector<double> nodes_;
  std::vector<double> samples_;
};

/// Requires grid_exponent >= 6 (and <= 12 to bound memory).
double quadrature_oracle(const NormalizedTriple& t, std::int64_t m, std::int64_t n, int grid_exponent);

struct RichardsonEstimate {
  double fine;
  double coarse;
  double extrapolated;  // fine + (fine - coarse) / 3
};

/// Grid-doubling check: the midpoint rule at 2^k and 2^(k-1).
RichardsonEstimate quadrature_richardson(const NormalizedTriple& t, std::int64_t m, std::int64_t n,
                                         int grid_exponent);

/// Precomputed coefficients for |m|, |n| <= M.
class FourierTable {
 public:
  FourierTable(const NormalizedTriple& t, std::int64_t M);

  std::int64_t order() const { return M_; }
  double at(std::int64_t m, std::int64_t n) const;

  /// Real part of sum_{|m|,|n| <= M} Lhat(m,n) e(m x + n y).
  double evaluate(const TorusPoint& p) const;

 private:
  std::int64_t M_;
  std::vector<double> values_;
};

double partial_sum(const NormalizedTriple& t, const TorusPoint& p, std::int64_t M);

struct LimitReport {
  CoefficientCase limit_case;
  double limit_value;
  std::vector<double> steps;
  std::vector<double> generic_values;
  std::vector<double> errors;
  /// Errors strictly decrease along the sequence and the last is below
  /// tolerance_factor * last step.
  bool converged;
};

/// Approaches `limit` (which must have exactly one vanishing F_i at (m, n)) along
/// limit + step * direction for each step, evaluating the generic formula on the way.
/// Throws std::invalid_argument if no F_i vanishes at the limit or a perturbed triple is
/// itself degenerate.
LimitReport limit_consistency(const NormalizedTriple& limit, std::int64_t m, std::int64_t n,
                              std::array<double, 3> direction, std::span<const double> steps,
                              double tolerance_factor = 10.0);

}  // namespace bernheight
