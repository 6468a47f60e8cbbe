#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bernheight/periodic_form.hpp"
#include "bernheight/quadform.hpp"
#include "bernheight/rational.hpp"

namespace bernheight {

/// Integer coordinates (u, v) of a point in Z^2 / Q Z^2.
struct IntegerLift {
  std::int64_t u = 0;
  std::int64_t v = 0;
  friend bool operator==(const IntegerLift&, const IntegerLift&) = default;
};

/// (x, y) = Q^{-1} (u, v) before reduction mod Z^2. Satisfies
/// a x + b y = u, b x + c y = v and alpha x - gamma y = u - v.
RationalPoint lift_coordinates(const QuadTriple& t, const IntegerLift& lift);

TorusPoint lift_to_torus(const QuadTriple& t, const IntegerLift& lift);

/// Points at one place, stored as lifts together with their torus images.
class LocalPointSet {
 public:
  /// Throws std::invalid_argument if two lifts give the same torus point.
  LocalPointSet(NormalizedTriple place, std::vector<IntegerLift> lifts);

  const NormalizedTriple& place() const { return place_; }
  const std::vector<IntegerLift>& lifts() const { return lifts_; }
  const std::vector<TorusPoint>& points() const { return points_; }
  std::size_t size() const { return lifts_.size(); }

 private:
  NormalizedTriple place_;
  std::vector<IntegerLift> lifts_;
  std::vector<TorusPoint> points_;
};

/// Torsion level for the averaging formulas: d even and divisible by 2 Delta(a,b,c).
class DAverageParams {
 public:
  /// Throws std::invalid_argument if the congruence fails.
  DAverageParams(std::int64_t d, const QuadTriple& t);

  static bool is_valid(std::int64_t d, const QuadTriple& t);

  std::int64_t d() const { return d_; }

 private:
  std::int64_t d_;
};

/// Lhat(0,0), the mean of L; same as zero_coefficient(t).
Rational mean_of_L(const QuadTriple& t);

struct LocalHeight {
  Rational quarter_L;     // L(p) / 4
  Rational quarter_mean;  // Lhat(0,0) / 4
  Rational value;         // quarter_L - quarter_mean
};

LocalHeight bernoulli_local_height(const NormalizedTriple& t, const TorusPoint& p);

struct AvgDClosedForm {
  Rational mean_term;       // Lhat(0,0)
  Rational bernoulli_part;  // the three B2 terms
  Rational total;
};

/// Avg_d L(p) = Lhat(0,0)
///   + alpha (c,b)^2 / (D d^2) B2(d (b x + c y) / (c,b))
///   + gamma (a,b)^2 / (D d^2) B2(d (a x + b y) / (a,b))
///   + b (alpha,gamma)^2 / (D d^2) B2(d (alpha x - gamma y) / (alpha,gamma)).
AvgDClosedForm avg_d_closed_form(const NormalizedTriple& t, const TorusPoint& p,
                                 const DAverageParams& d);

/// Avg_d of the local height at p; equals bernoulli_part / 4.
Rational avg_d_local_height(const NormalizedTriple& t, const TorusPoint& p, const DAverageParams& d);

enum class AverageMethod { ClosedForm, Direct };

/// Mean of Avg_d lambda(P - Q) over ordered pairs of distinct indices. Repeated points are
/// allowed. Direct enumerates the d^2 torsion translates instead of using the B2 formula.
/// Throws std::invalid_argument for fewer than two points.
Rational pair_average(const NormalizedTriple& t, std::span<const TorusPoint> points,
                      const DAverageParams& d, AverageMethod method = AverageMethod::ClosedForm);

/// (1 / (24 d^2)) ((alpha + gamma + b) / D - xi / (N - 1)).
Rational fourier_avg_rhs(const QuadTriple& t, std::int64_t d, std::int64_t N);

struct FourierAvgBound {
  Rational lhs;
  Rational rhs;
  bool holds;
};

/// Pair-and-torsion average of the local height against its Fejer-type lower bound.
FourierAvgBound fourier_avg_lower_bound(const LocalPointSet& S, const DAverageParams& d,
                                        AverageMethod method = AverageMethod::ClosedForm);
FourierAvgBound fourier_avg_lower_bound(const NormalizedTriple& t, std::span<const TorusPoint> points,
                                        const DAverageParams& d,
                                        AverageMethod method = AverageMethod::ClosedForm);

/// Cell of the 6x6x6 partition of (R/Z)^3 containing
/// (d (bx+cy)/(c,b), d (ax+by)/(a,b), d (alpha x - gamma y)/(alpha,gamma)).
std::array<int, 3> cube_cell(const NormalizedTriple& t, const TorusPoint& p, std::int64_t d);

struct PigeonholeResult {
  std::vector<std::size_t> indices;  // into the input, increasing
  std::array<int, 3> cell{};
  Rational bound;                    // xi / (144 d^2)
  std::optional<Rational> min_pair_average;  // empty for a single point
  bool size_ok = false;                      // |subset| >= ceil(N / 216)
  bool holds = false;                        // size_ok and every pair meets the bound
};

/// The largest cube cell (ties go to the lexicographically smallest cell).
PigeonholeResult pigeonhole_subset(const NormalizedTriple& t, std::span<const TorusPoint> points,
                                   const DAverageParams& d);
PigeonholeResult pigeonhole_subset(const LocalPointSet& S, const DAverageParams& d);

}  // namespace bernheight
