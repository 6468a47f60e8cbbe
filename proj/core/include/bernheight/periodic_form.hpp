#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "bernheight/quadform.hpp"
#include "bernheight/rational.hpp"

namespace bernheight {

/// A point of (R/Z)^2, stored exactly as its representative in [-1/2, 1/2)^2.
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(const Rational& x, const Rational& y);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  TorusPoint operator+(const TorusPoint& o) const { return {x_ + o.x_, y_ + o.y_}; }
  TorusPoint operator-(const TorusPoint& o) const { return {x_ - o.x_, y_ - o.y_}; }
  TorusPoint operator-() const { return {-x_, -y_}; }

  friend bool operator==(const TorusPoint& p, const TorusPoint& q) {
    return p.x_ == q.x_ && p.y_ == q.y_;
  }

 private:
  Rational x_{0};
  Rational y_{0};
};

struct RationalPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// F(x, y) = a x^2 + 2 b x y + c y^2, exact.
Rational eval_F(const QuadTriple& t, const Rational& x, const Rational& y);

/// Which piece of the centered unit square the point falls in.
/// Octagon: F = L with (0,0) the unique minimizing offset.
/// I..IV: L = F(x, y-1), F(x-1, y), F(x, y+1), F(x+1, y) respectively.
/// Boundary: several offsets attain the minimum.
enum class Region { Octagon, I, II, III, IV, Boundary };

std::string_view to_string(Region r);

struct MinimizerResult {
  Rational value;
  std::vector<std::pair<int, int>> minimizers;  // offsets (m, n) in {-1,0,1}^2
  Region region;
};

/// L(p) = min over integer translates of F, evaluated on the centered representative
/// with the offset window {-1,0,1}^2 (sufficient for normalized triples).
MinimizerResult eval_L(const NormalizedTriple& t, const TorusPoint& p);

/// Value only; same as eval_L(t, p).value.
Rational eval_L_value(const NormalizedTriple& t, const TorusPoint& p);

/// Vertices of the region where F = L restricted to the centered square.
struct HexagonGeometry {
  /// True when b = 0: the region is the full square.
  bool degenerate = false;
  /// Non-degenerate: Q12, Q34, then the four points where the hexagon edges meet the
  /// square boundary, (1/2,0), (0,1/2), (-1/2,0), (0,-1/2).
  /// Degenerate: the four square corners.
  std::vector<RationalPoint> vertices;
  /// The full hexagon {F = L} (edges along +-e1, +-e2, +-(e1 - e2)), counter-clockwise
  /// from Q12. Empty when degenerate.
  std::vector<RationalPoint> cell;
  /// Octagon (square cut by the hexagon), counter-clockwise. Equals the square when degenerate.
  std::vector<RationalPoint> octagon;
  /// The four triangles of square \ hexagon, indexed I..IV. Empty when degenerate.
  std::vector<std::vector<RationalPoint>> triangles;
};

HexagonGeometry hexagon_vertices(const NormalizedTriple& t);

/// (1/d^2) sum_{0 <= i,j < d} L(x + i/d, y + j/d), computed exactly.
Rational avg_d_direct(const NormalizedTriple& t, const TorusPoint& p, std::int64_t d);

}  // namespace bernheight
