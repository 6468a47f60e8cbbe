#include "bernheight/periodic_form.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bernheight {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

constexpr std::array<std::pair<int, int>, 9> kOffsets{{
    {0, 0}, {-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};

Region classify(const std::vector<std::pair<int, int>>& minimizers) {
  if (minimizers.size() > 1) {
    return Region::Boundary;
  }
  const auto off = minimizers.front();
  if (off == std::pair{0, 0}) return Region::Octagon;
  if (off == std::pair{0, -1}) return Region::I;
  if (off == std::pair{-1, 0}) return Region::II;
  if (off == std::pair{0, 1}) return Region::III;
  if (off == std::pair{1, 0}) return Region::IV;
  throw std::logic_error("unique minimizing offset outside the four triangle regions");
}

// Exact L at the point (X/q, Y/q) on integers, returned as a numerator over q^2.
// Valid while |coefficients| * q^2 stays far inside the int128 range.
i128 scaled_L(std::int64_t a, std::int64_t b, std::int64_t c, i128 X, i128 Y, i128 q) {
  // Center into [-q/2, q/2).
  auto center = [q](i128 v) {
    i128 r = v % q;
    if (r < 0) r += q;
    if (2 * r >= q) r -= q;
    return r;
  };
  X = center(X);
  Y = center(Y);
  i128 best = 0;
  bool first = true;
  for (const auto& [i, j] : kOffsets) {
    const i128 u = X + i * q;
    const i128 v = Y + j * q;
    const i128 f = a * u * u + 2 * b * u * v + c * v * v;
    if (first || f < best) {
      best = f;
      first = false;
    }
  }
  return best;
}

}  // namespace

TorusPoint::TorusPoint(const Rational& x, const Rational& y)
    : x_(centered_mod1(x)), y_(centered_mod1(y)) {}

Rational eval_F(const QuadTriple& t, const Rational& x, const Rational& y) {
  Rational out = make_rational(t.a()) * x * x + make_rational(2 * t.b()) * x * y +
                 make_rational(t.c()) * y * y;
  return out;
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Octagon: return "octagon";
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::Boundary: return "boundary";
  }
  return "?";
}

MinimizerResult eval_L(const NormalizedTriple& t, const TorusPoint& p) {
  MinimizerResult out;
  bool first = true;
  for (const auto& [i, j] : kOffsets) {
    Rational f = eval_F(t.triple(), p.x() + i, p.y() + j);
    if (first || f < out.value) {
      out.value = f;
      out.minimizers.assign(1, {i, j});
      first = false;
    } else if (f == out.value) {
      out.minimizers.emplace_back(i, j);
    }
  }
  std::sort(out.minimizers.begin(), out.minimizers.end());
  out.region = classify(out.minimizers);
  return out;
}

Rational eval_L_value(const NormalizedTriple& t, const TorusPoint& p) {
  Rational best;
  bool first = true;
  for (const auto& [i, j] : kOffsets) {
    Rational f = eval_F(t.triple(), p.x() + i, p.y() + j);
    if (first || f < best) {
      best = f;
      first = false;
    }
  }
  return best;
}

HexagonGeometry hexagon_vertices(const NormalizedTriple& t) {
  const Rational half(1, 2);
  HexagonGeometry g;
  if (t.b() == 0) {
    g.degenerate = true;
    g.vertices = {{half, half}, {-half, half}, {-half, -half}, {half, -half}};
    g.octagon = g.vertices;
    return g;
  }
  const Rational a = make_rational(t.a()), b = make_rational(t.b()), c = make_rational(t.c());
  const Rational D = make_rational(t.discriminant());
  const Rational alpha = a - b, gamma = c - b;

  const RationalPoint q12{c * alpha / (2 * D), a * gamma / (2 * D)};
  const RationalPoint q34{-q12.x, -q12.y};
  g.vertices = {q12, q34, {half, 0}, {0, half}, {-half, 0}, {0, -half}};

  // Edge lines of the cell: a x + b y = +-a/2, b x + c y = +-c/2,
  // alpha x - gamma y = +-(alpha + gamma)/2.  Solve pairwise (Cramer).
  auto meet = [](Rational p1, Rational q1, Rational r1, Rational p2, Rational q2, Rational r2) {
    const Rational det = p1 * q2 - p2 * q1;
    return RationalPoint{(r1 * q2 - r2 * q1) / det, (p1 * r2 - p2 * r1) / det};
  };
  const Rational s = (alpha + gamma) / 2;
  // e1-edge with (e1 - e2)-edge, then (e1 - e2)-edge with (-e2)-edge.
  const RationalPoint v2 = meet(a, b, a / 2, alpha, -gamma, s);
  const RationalPoint v3 = meet(b, c, -c / 2, alpha, -gamma, s);
  g.cell = {q12, {-v3.x, -v3.y}, {-v2.x, -v2.y}, q34, v3, v2};
  auto signed_area = [](const std::vector<RationalPoint>& poly) {
    Rational acc = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % poly.size()];
      acc += p.x * q.y - q.x * p.y;
    }
    return acc;
  };
  if (signed_area(g.cell) < 0) {
    std::reverse(g.cell.begin() + 1, g.cell.end());
  }
  g.octagon = {{half, 0}, q12, {0, half}, {-half, half}, {-half, 0}, q34, {0, -half}, {half, -half}};
  g.triangles = {
      {{0, half}, {half, half}, q12},     // I
      {{half, 0}, {half, half}, q12},     // II
      {{0, -half}, {-half, -half}, q34},  // III
      {{-half, 0}, {-half, -half}, q34},  // IV
  };
  return g;
}

Rational avg_d_direct(const NormalizedTriple& t, const TorusPoint& p, std::int64_t d) {
  if (d < 1) {
    throw std::invalid_argument("d must be positive");
  }
  // Common denominator for every grid point p + (i/d, j/d).
  const Integer qz = lcm(lcm(p.x().get_den(), p.y().get_den()), make_integer(d));
  const std::int64_t coeff = std::max({t.a(), 2 * t.b(), t.c()});
  const bool fits = qz.fits_slong_p() && qz <= (1L << 24) && coeff <= (1L << 20);
  if (fits) {
    const std::int64_t q = qz.get_si();
    const std::int64_t step = q / d;
    const Rational xs = p.x() * Rational(qz), ys = p.y() * Rational(qz);
    const i128 X0 = to_int64(xs.get_num());
    const i128 Y0 = to_int64(ys.get_num());
    i128 total = 0;
    for (std::int64_t i = 0; i < d; ++i) {
      for (std::int64_t j = 0; j < d; ++j) {
        total += scaled_L(t.a(), t.b(), t.c(), X0 + i * step, Y0 + j * step, q);
      }
    }
    // total / (q^2 d^2); L >= 0 so total is non-negative. Convert via two 64-bit halves.
    const u128 mag = static_cast<u128>(total);
    Integer num = Integer(static_cast<unsigned long>(mag >> 64));
    num <<= 64;
    num += Integer(static_cast<unsigned long>(mag & 0xffffffffffffffffULL));
    Rational out(num, qz * qz * make_integer(d) * make_integer(d));
    out.canonicalize();
    return out;
  }
  Rational total = 0;
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      total += eval_L_value(t, TorusPoint(p.x() + make_rational(i, d), p.y() + make_rational(j, d)));
    }
  }
  return total / (make_rational(d) * make_rational(d));
}

}  // namespace bernheight
