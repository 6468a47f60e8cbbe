// Generators and brute-force oracles shared by the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "bernheight/periodic_form.hpp"
#include "bernheight/quadform.hpp"
#include "bernheight/rational.hpp"
#include "bernheight/theta.hpp"

namespace testsupport {

using namespace bernheight;

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// 0 <= 2b <= a <= c <= bound.
inline NormalizedTriple random_normalized(std::mt19937_64& rng, std::int64_t bound) {
  const std::int64_t a = uniform(rng, 1, bound);
  const std::int64_t b = uniform(rng, 0, a / 2);
  const std::int64_t c = uniform(rng, a, bound);
  return NormalizedTriple::from_normalized(QuadTriple(a, b, c));
}

/// Any positive definite triple with entries bounded by `bound`.
inline QuadTriple random_definite(std::mt19937_64& rng, std::int64_t bound) {
  while (true) {
    const std::int64_t a = uniform(rng, 1, bound);
    const std::int64_t b = uniform(rng, -bound, bound);
    const std::int64_t c = uniform(rng, 1, bound);
    if (a * c - b * b > 0) return QuadTriple(a, b, c);
  }
}

inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_den, std::int64_t range = 3) {
  const std::int64_t den = uniform(rng, 1, max_den);
  return make_rational(uniform(rng, -range * den, range * den), den);
}

inline TorusPoint random_point(std::mt19937_64& rng, std::int64_t max_den) {
  return {random_rational(rng, max_den), random_rational(rng, max_den)};
}

/// Minimum of F over the offsets [-3,3]^2 around the centered representative.
inline Rational L_wide(const QuadTriple& t, const TorusPoint& p) {
  Rational best;
  bool first = true;
  for (int i = -3; i <= 3; ++i) {
    for (int j = -3; j <= 3; ++j) {
      const Rational v = eval_F(t, p.x() + i, p.y() + j);
      if (first || v < best) {
        best = v;
        first = false;
      }
    }
  }
  return best;
}

/// Plain enumeration of the d^2 translates with the wide window.
inline Rational avg_d_oracle(const QuadTriple& t, const TorusPoint& p, std::int64_t d) {
  Rational sum = 0;
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j)
      sum += L_wide(t, TorusPoint(p.x() + make_rational(i, d), p.y() + make_rational(j, d)));
  return sum / make_rational(d * d);
}

/// Over all unimodular M with entries in [-bound, bound], the image of t minimizing
/// (a, |b|) lexicographically, reported as (a, |b|, c).
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> brute_force_reduce(const QuadTriple& t,
                                                                              std::int64_t bound = 10) {
  std::tuple<std::int64_t, std::int64_t, std::int64_t> best{INT64_MAX, INT64_MAX, INT64_MAX};
  for (std::int64_t p = -bound; p <= bound; ++p)
    for (std::int64_t q = -bound; q <= bound; ++q) {
      const std::int64_t a = t.a() * p * p + 2 * t.b() * p * q + t.c() * q * q;
      if (a <= 0 || a > std::get<0>(best)) continue;
      for (std::int64_t r = -bound; r <= bound; ++r)
        for (std::int64_t s = -bound; s <= bound; ++s) {
          const std::int64_t det = p * s - q * r;
          if (det != 1 && det != -1) continue;
          const std::int64_t b = t.a() * p * r + t.b() * (p * s + q * r) + t.c() * q * s;
          const std::int64_t c = t.a() * r * r + 2 * t.b() * r * s + t.c() * s * s;
          best = std::min(best, std::tuple{a, b < 0 ? -b : b, c});
        }
    }
  return best;
}

/// Tropical theta by enumerating every m with |m_i| <= radius.
inline Rational theta_box(const ValuationMatrix& Q, const ValuationVector& w, std::int64_t radius) {
  const std::size_t g = Q.dim();
  IntVector m(g, -radius);
  Rational best;
  bool first = true;
  while (true) {
    const ValuationVector mv = to_valuation(m);
    Rational v = Q.bilinear(mv, mv);
    for (std::size_t i = 0; i < g; ++i) v += mv[i] * w[i];
    if (first || v < best) {
      best = v;
      first = false;
    }
    std::size_t k = g;
    while (k > 0) {
      --k;
      if (m[k] < radius) {
        ++m[k];
        break;
      }
      m[k] = -radius;
      if (k == 0) return best;
    }
  }
}

/// Random symmetric positive definite 2x2 rational matrix with entries bounded by `bound`.
inline ValuationMatrix random_valuation_matrix(std::mt19937_64& rng, std::int64_t bound) {
  while (true) {
    const Rational a = make_rational(uniform(rng, 1, bound * 4), 4);
    const Rational c = make_rational(uniform(rng, 1, bound * 4), 4);
    const Rational b = make_rational(uniform(rng, -bound * 4, bound * 4), 4);
    if (a * c - b * b > 0) return ValuationMatrix::from_triple(a, b, c);
  }
}

}  // namespace testsupport
