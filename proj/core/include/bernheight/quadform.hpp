#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>

#include "bernheight/rational.hpp"

namespace bernheight {

/// Positive definite integer binary quadratic form a x^2 + 2 b x y + c y^2,
/// i.e. the Gram matrix [[a, b], [b, c]].
class QuadTriple {
 public:
  /// Throws std::invalid_argument unless a > 0, c > 0 and ac - b^2 > 0.
  QuadTriple(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }

  std::int64_t discriminant() const { return a_ * c_ - b_ * b_; }  // D
  std::int64_t alpha() const { return a_ - b_; }
  std::int64_t gamma() const { return c_ - b_; }

  /// (ea, eb, ec) for e >= 1.
  QuadTriple scaled(std::int64_t e) const;

  friend bool operator==(const QuadTriple&, const QuadTriple&) = default;

 private:
  std::int64_t a_, b_, c_;
};

std::ostream& operator<<(std::ostream& os, const QuadTriple& t);

struct FormInvariants {
  std::int64_t D;
  std::int64_t alpha;
  std::int64_t gamma;
};

FormInvariants invariants(const QuadTriple& t);

/// The four integer linear forms attached to an index pair (m, n):
///   F0 = c alpha m + a gamma n,  F1 = c m - b n,  F2 = a n - b m,  F3 = gamma m + alpha n.
struct LinearFormValues {
  std::int64_t F0, F1, F2, F3;
};

LinearFormValues linear_forms(const QuadTriple& t, std::int64_t m, std::int64_t n);

/// 2x2 integer matrix, row-major.
struct IntMatrix2 {
  std::array<std::int64_t, 4> e{1, 0, 0, 1};

  static IntMatrix2 identity() { return {}; }
  std::int64_t det() const { return e[0] * e[3] - e[1] * e[2]; }
  IntMatrix2 operator*(const IntMatrix2& rhs) const;
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// M * Gram(t) * transpose(M); M must be unimodular.
QuadTriple transform_form(const QuadTriple& t, const IntMatrix2& M);

/// A triple with 0 <= 2b <= a <= c together with the basis change that produced it.
class NormalizedTriple {
 public:
  /// Throws std::invalid_argument if t is not already normalized.
  static NormalizedTriple from_normalized(const QuadTriple& t);

  static bool is_normalized(const QuadTriple& t);

  const QuadTriple& triple() const { return triple_; }
  /// transform * Gram(original) * transpose(transform) == Gram(triple()).
  const IntMatrix2& transform() const { return transform_; }

  std::int64_t a() const { return triple_.a(); }
  std::int64_t b() const { return triple_.b(); }
  std::int64_t c() const { return triple_.c(); }
  std::int64_t discriminant() const { return triple_.discriminant(); }
  std::int64_t alpha() const { return triple_.alpha(); }
  std::int64_t gamma() const { return triple_.gamma(); }

  /// Scaling by e >= 1 preserves normalization.
  NormalizedTriple scaled(std::int64_t e) const;

  friend bool operator==(const NormalizedTriple& x, const NormalizedTriple& y) {
    return x.triple_ == y.triple_;
  }

 private:
  NormalizedTriple(QuadTriple t, IntMatrix2 transform) : triple_(t), transform_(transform) {}
  friend NormalizedTriple normalize(const QuadTriple& t);

  QuadTriple triple_;
  IntMatrix2 transform_;
};

/// Gauss reduction followed by the sign flip of b; the result satisfies
/// 0 <= 2b <= a <= c and has the same discriminant.
NormalizedTriple normalize(const QuadTriple& t);

/// xi(a,b,c) = (alpha gcd(c,b)^2 + gamma gcd(a,b)^2 + b gcd(alpha,gamma)^2) / D.
/// Homogeneous of degree one in (a,b,c).
Rational xi(const QuadTriple& t);

/// Delta(a,b,c) = D / gcd(a,b,c)^2, invariant under scaling.
std::int64_t delta(const QuadTriple& t);

}  // namespace bernheight
