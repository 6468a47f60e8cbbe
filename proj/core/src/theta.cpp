#include "bernheight/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace bernheight {

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan elimination; returns the determinant and fills the inverse.
Rational invert(const RMatrix& m, RMatrix& inv) {
  const std::size_t g = m.size();
  RMatrix a = m;
  inv.assign(g, std::vector<Rational>(g, Rational(0)));
  for (std::size_t i = 0; i < g; ++i) inv[i][i] = 1;
  Rational det = 1;
  for (std::size_t col = 0; col < g; ++col) {
    std::size_t pivot = col;
    while (pivot < g && a[pivot][col] == 0) ++pivot;
    if (pivot == g) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (std::size_t j = 0; j < g; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < g; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < g; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return det;
}

Rational leading_minor(const RMatrix& m, std::size_t k) {
  RMatrix sub(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
  RMatrix unused;
  return invert(sub, unused);
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

Integer round_of(const Rational& q) { return floor_of(q + Rational(1, 2)); }

// Smallest non-negative integer r with r^2 >= q.
std::int64_t ceil_sqrt(const Rational& q) {
  if (q <= 0) return 0;
  std::int64_t r = static_cast<std::int64_t>(std::ceil(std::sqrt(q.get_d())));
  while (r > 0 && Rational(r - 1) * (r - 1) >= q) --r;
  while (Rational(r) * r < q) ++r;
  return r;
}

Rational theta_term(const ValuationMatrix& Q, const ValuationVector& w, const IntVector& m) {
  const ValuationVector mv = to_valuation(m);
  Rational out = Q.bilinear(mv, mv);
  for (std::size_t i = 0; i < m.size(); ++i) out += mv[i] * w[i];
  return out;
}

void check_dims(const ValuationMatrix& Q, std::size_t size) {
  if (size != Q.dim()) {
    throw std::invalid_argument("vector length does not match the matrix dimension");
  }
}

}  // namespace

ValuationMatrix::ValuationMatrix(RMatrix rows) : rows_(std::move(rows)) {
  const std::size_t g = rows_.size();
  if (g == 0) {
    throw std::invalid_argument("empty valuation matrix");
  }
  for (std::size_t i = 0; i < g; ++i) {
    if (rows_[i].size() != g) throw std::invalid_argument("valuation matrix must be square");
    for (std::size_t j = 0; j < g; ++j) rows_[i][j].canonicalize();
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (rows_[i][j] != rows_[j][i]) throw std::invalid_argument("valuation matrix must be symmetric");
  for (std::size_t k = 1; k <= g; ++k) {
    if (leading_minor(rows_, k) <= 0) {
      throw std::invalid_argument("valuation matrix must be positive definite");
    }
  }
  det_ = invert(rows_, inverse_);
}

ValuationMatrix ValuationMatrix::from_triple(const Rational& a, const Rational& b, const Rational& c) {
  return ValuationMatrix({{a, b}, {b, c}});
}

Rational ValuationMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < dim(); ++i) t += rows_[i][i];
  return t;
}

Rational ValuationMatrix::bilinear(const ValuationVector& x, const ValuationVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) s += x[i] * rows_[i][j] * y[j];
  return s;
}

ValuationVector ValuationMatrix::apply(const ValuationVector& x) const {
  ValuationVector out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out[i] += rows_[i][j] * x[j];
  return out;
}

ValuationVector to_valuation(const IntVector& n) {
  ValuationVector out;
  out.reserve(n.size());
  for (std::int64_t k : n) out.push_back(make_rational(k));
  return out;
}

TropicalTheta tropical_theta(const ValuationMatrix& Q, const ValuationVector& w) {
  const std::size_t g = Q.dim();
  check_dims(Q, w.size());
  // Real minimizer of m^T Q m + m^T w.
  ValuationVector center(g, Rational(0));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) center[i] -= Q.inverse()[i][j] * w[j];
    center[i] /= 2;
  }
  IntVector start(g);
  for (std::size_t i = 0; i < g; ++i) start[i] = to_int64(round_of(center[i]));
  const Rational incumbent = theta_term(Q, w, start);
  // f(m) = (m - c)^T Q (m - c) - c^T Q c, and lambda_min >= det / trace^(g-1).
  const Rational gap = incumbent + Q.bilinear(center, center);
  Rational lambda_low = Q.determinant();
  for (std::size_t i = 1; i < g; ++i) lambda_low /= Q.trace();
  const std::int64_t r = ceil_sqrt(gap / lambda_low);

  IntVector lo(g), hi(g);
  for (std::size_t i = 0; i < g; ++i) {
    lo[i] = to_int64(ceil_of(center[i] - r));
    hi[i] = to_int64(floor_of(center[i] + r));
  }
  TropicalTheta out;
  out.radius = r;
  IntVector m = lo;
  bool have = false;
  while (true) {
    const Rational v = theta_term(Q, w, m);
    if (!have || v < out.value) {
      out.value = v;
      out.argmin = m;
      out.ties = 1;
      have = true;
    } else if (v == out.value) {
      ++out.ties;
    }
    std::size_t k = g;
    while (k > 0) {
      --k;
      if (m[k] < hi[k]) {
        ++m[k];
        break;
      }
      m[k] = lo[k];
      if (k == 0) {
        out.value.canonicalize();
        return out;
      }
    }
  }
}

ThetaTransformCheck check_theta_transform(const ValuationMatrix& Q, const ValuationVector& w,
                                          const IntVector& n) {
  check_dims(Q, w.size());
  check_dims(Q, n.size());
  const ValuationVector nv = to_valuation(n);
  const ValuationVector Qn = Q.apply(nv);
  ValuationVector shifted = w;
  Rational nw = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    shifted[i] += 2 * Qn[i];
    nw += nv[i] * w[i];
  }
  ThetaTransformCheck out;
  out.lhs = tropical_theta(Q, shifted).value;
  out.rhs = tropical_theta(Q, w).value - Q.bilinear(nv, nv) - nw;
  out.rhs.canonicalize();
  out.equal = out.lhs == out.rhs;
  return out;
}

LambdaInvarianceCheck check_lambda_invariance(const ValuationMatrix& Q, const ValuationVector& w,
                                              const IntVector& n) {
  check_dims(Q, w.size());
  check_dims(Q, n.size());
  const ValuationVector Qn = Q.apply(to_valuation(n));
  ValuationVector shifted = w;
  for (std::size_t i = 0; i < w.size(); ++i) shifted[i] += 2 * Qn[i];
  auto quarter_inverse_norm = [&Q](const ValuationVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * Q.inverse()[i][j] * v[j];
    return Rational(s / 4);
  };
  LambdaInvarianceCheck out;
  out.delta = (tropical_theta(Q, shifted).value + quarter_inverse_norm(shifted)) -
              (tropical_theta(Q, w).value + quarter_inverse_norm(w));
  out.delta.canonicalize();
  out.zero = out.delta == 0;
  return out;
}

}  // namespace bernheight
