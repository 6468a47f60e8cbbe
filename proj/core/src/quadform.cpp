#include "bernheight/quadform.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bernheight {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) {
    --q;
  }
  return q;
}

}  // namespace

QuadTriple::QuadTriple(std::int64_t a, std::int64_t b, std::int64_t c) : a_(a), b_(b), c_(c) {
  if (a <= 0 || c <= 0 || a * c - b * b <= 0) {
    throw std::invalid_argument("quadratic form (" + std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ") is not positive definite");
  }
}

QuadTriple QuadTriple::scaled(std::int64_t e) const {
  if (e < 1) {
    throw std::invalid_argument("scale factor must be positive");
  }
  return QuadTriple(e * a_, e * b_, e * c_);
}

std::ostream& operator<<(std::ostream& os, const QuadTriple& t) {
  return os << "(" << t.a() << "," << t.b() << "," << t.c() << ")";
}

FormInvariants invariants(const QuadTriple& t) {
  return {t.discriminant(), t.alpha(), t.gamma()};
}

LinearFormValues linear_forms(const QuadTriple& t, std::int64_t m, std::int64_t n) {
  const std::int64_t a = t.a(), b = t.b(), c = t.c();
  const std::int64_t alpha = t.alpha(), gamma = t.gamma();
  LinearFormValues f{};
  f.F0 = c * alpha * m + a * gamma * n;
  f.F1 = c * m - b * n;
  f.F2 = a * n - b * m;
  f.F3 = gamma * m + alpha * n;
  return f;
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& r) const {
  IntMatrix2 out;
  out.e = {e[0] * r.e[0] + e[1] * r.e[2], e[0] * r.e[1] + e[1] * r.e[3],
           e[2] * r.e[0] + e[3] * r.e[2], e[2] * r.e[1] + e[3] * r.e[3]};
  return out;
}

QuadTriple transform_form(const QuadTriple& t, const IntMatrix2& M) {
  if (M.det() != 1 && M.det() != -1) {
    throw std::invalid_argument("basis change is not unimodular");
  }
  const std::int64_t p = M.e[0], q = M.e[1], r = M.e[2], s = M.e[3];
  const std::int64_t a = t.a(), b = t.b(), c = t.c();
  // rows (p,q), (r,s) applied as M G M^T
  return QuadTriple(a * p * p + 2 * b * p * q + c * q * q,
                    a * p * r + b * (p * s + q * r) + c * q * s,
                    a * r * r + 2 * b * r * s + c * s * s);
}

bool NormalizedTriple::is_normalized(const QuadTriple& t) {
  return 0 <= 2 * t.b() && 2 * t.b() <= t.a() && t.a() <= t.c();
}

NormalizedTriple NormalizedTriple::from_normalized(const QuadTriple& t) {
  if (!is_normalized(t)) {
    throw std::invalid_argument("triple (" + std::to_string(t.a()) + "," + std::to_string(t.b()) +
                                "," + std::to_string(t.c()) + ") is not normalized (need 0 <= 2b <= a <= c)");
  }
  return NormalizedTriple(t, IntMatrix2::identity());
}

NormalizedTriple NormalizedTriple::scaled(std::int64_t e) const {
  return NormalizedTriple(triple_.scaled(e), transform_);
}

NormalizedTriple normalize(const QuadTriple& t) {
  std::int64_t a = t.a(), b = t.b(), c = t.c();
  IntMatrix2 M = IntMatrix2::identity();
  for (;;) {
    // Translate the second basis vector so that -a < 2b <= a.
    const std::int64_t k = floor_div(a - 2 * b, 2 * a);
    if (k != 0) {
      c = c + 2 * k * b + k * k * a;
      b = b + k * a;
      M = IntMatrix2{{1, 0, k, 1}} * M;
    }
    if (a > c) {
      std::swap(a, c);
      M = IntMatrix2{{0, 1, 1, 0}} * M;
      continue;
    }
    break;
  }
  if (b < 0) {
    b = -b;
    M = IntMatrix2{{-1, 0, 0, 1}} * M;
  }
  return NormalizedTriple(QuadTriple(a, b, c), M);
}

Rational xi(const QuadTriple& t) {
  const std::int64_t a = t.a(), b = t.b(), c = t.c();
  const std::int64_t alpha = t.alpha(), gamma = t.gamma();
  const std::int64_t gcb = std::gcd(c, b);
  const std::int64_t gab = std::gcd(a, b);
  Integer num = make_integer(alpha) * gcb * gcb + make_integer(gamma) * gab * gab;
  if (b != 0) {
    const std::int64_t gag = std::gcd(alpha, gamma);
    num += make_integer(b) * gag * gag;
  }
  Rational out(num, make_integer(t.discriminant()));
  out.canonicalize();
  return out;
}

std::int64_t delta(const QuadTriple& t) {
  const std::int64_t g = std::gcd(std::gcd(t.a(), t.b()), t.c());
  return t.discriminant() / (g * g);
}

}  // namespace bernheight
