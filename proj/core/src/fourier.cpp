#include "bernheight/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bernheight {

namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

// sin(pi * num / den) with the argument reduced exactly modulo 2.
double sin_pi_ratio(std::int64_t num, std::int64_t den) {
  const std::int64_t period = 2 * den;
  std::int64_t r = num % period;
  if (r < 0) r += period;
  if (r == 0 || r == den) return 0.0;
  return std::sin(kPi * static_cast<double>(r) / static_cast<double>(den));
}

double pi_pow(int k) { return std::pow(kPi, k); }

void check_grid_exponent(int k) {
  if (k < 6 || k > 12) {
    throw std::invalid_argument("grid exponent must lie in [6, 12], got " + std::to_string(k));
  }
}

}  // namespace

std::string_view to_string(CoefficientCase c) {
  switch (c) {
    case CoefficientCase::ZeroIndex: return "zero";
    case CoefficientCase::F1Zero: return "F1";
    case CoefficientCase::F2Zero: return "F2";
    case CoefficientCase::F3Zero: return "F3";
    case CoefficientCase::Generic: return "generic";
  }
  return "?";
}

Rational zero_coefficient(const QuadTriple& t) {
  const Integer a = make_integer(t.a()), b = make_integer(t.b()), c = make_integer(t.c());
  Rational r((a + c) * (a * c - 2 * b * b) + 2 * b * b * b, 12 * make_integer(t.discriminant()));
  r.canonicalize();
  return r;
}

CoefficientCase classify_index(const QuadTriple& t, std::int64_t m, std::int64_t n) {
  if (m == 0 && n == 0) return CoefficientCase::ZeroIndex;
  const auto f = linear_forms(t, m, n);
  if (f.F1 == 0) return CoefficientCase::F1Zero;
  if (f.F2 == 0) return CoefficientCase::F2Zero;
  if (f.F3 == 0) return CoefficientCase::F3Zero;
  return CoefficientCase::Generic;
}

FourierCoefficient coefficient(const NormalizedTriple& nt, std::int64_t m, std::int64_t n) {
  const QuadTriple& t = nt.triple();
  const Integer a = make_integer(t.a()), b = make_integer(t.b()), c = make_integer(t.c());
  const Integer D = make_integer(t.discriminant());
  const Integer alpha = make_integer(t.alpha()), gamma = make_integer(t.gamma());
  const auto f = linear_forms(t, m, n);

  FourierCoefficient out;
  out.m = m;
  out.n = n;
  out.case_tag = classify_index(t, m, n);
  double trig = 1.0;
  switch (out.case_tag) {
    case CoefficientCase::ZeroIndex:
      out.prefactor = zero_coefficient(t);
      out.pi_power = 0;
      break;
    case CoefficientCase::F1Zero:
      out.prefactor = Rational(parity_sign(n) * alpha * c * c, 2 * D * make_integer(n) * make_integer(n));
      out.pi_power = 2;
      break;
    case CoefficientCase::F2Zero:
      out.prefactor = Rational(parity_sign(m) * gamma * a * a, 2 * D * make_integer(m) * make_integer(m));
      out.pi_power = 2;
      break;
    case CoefficientCase::F3Zero:
      out.prefactor =
          Rational(parity_sign(m + n + 1) * alpha * gamma * b, 2 * D * make_integer(m) * make_integer(n));
      out.pi_power = 2;
      break;
    case CoefficientCase::Generic:
      out.prefactor = Rational(D * D, 2 * make_integer(f.F1) * make_integer(f.F2) * make_integer(f.F3));
      out.pi_power = 3;
      trig = sin_pi_ratio(f.F0, t.discriminant());
      break;
  }
  out.prefactor.canonicalize();
  out.value = out.prefactor.get_d() * trig / pi_pow(out.pi_power);
  return out;
}

double coefficient_value(const NormalizedTriple& nt, std::int64_t m, std::int64_t n) {
  const QuadTriple& t = nt.triple();
  const double a = static_cast<double>(t.a()), b = static_cast<double>(t.b()),
               c = static_cast<double>(t.c());
  const double D = static_cast<double>(t.discriminant());
  const double alpha = a - b, gamma = c - b;
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  const auto f = linear_forms(t, m, n);
  switch (classify_index(t, m, n)) {
    case CoefficientCase::ZeroIndex:
      return zero_coefficient(t).get_d();
    case CoefficientCase::F1Zero:
      return parity_sign(n) * alpha * c * c / (2 * kPi * kPi * D * nd * nd);
    case CoefficientCase::F2Zero:
      return parity_sign(m) * gamma * a * a / (2 * kPi * kPi * D * md * md);
    case CoefficientCase::F3Zero:
      return parity_sign(m + n + 1) * alpha * gamma * b / (2 * kPi * kPi * D * md * nd);
    case CoefficientCase::Generic:
      return D * D * sin_pi_ratio(f.F0, t.discriminant()) /
             (2 * kPi * kPi * kPi * static_cast<double>(f.F1) * static_cast<double>(f.F2) *
              static_cast<double>(f.F3));
  }
  return 0.0;
}

double coefficient_alternate(const NormalizedTriple& nt, std::int64_t m, std::int64_t n, int variant) {
  const QuadTriple& t = nt.triple();
  if (classify_index(t, m, n) != CoefficientCase::Generic) {
    throw std::invalid_argument("alternate coefficient forms need F1 F2 F3 != 0");
  }
  const auto f = linear_forms(t, m, n);
  const std::int64_t D = t.discriminant();
  double s = 0.0;
  switch (variant) {
    case 1: s = parity_sign(n) * sin_pi_ratio(t.alpha() * f.F1, D); break;
    case 2: s = parity_sign(m) * sin_pi_ratio(t.gamma() * f.F2, D); break;
    case 3: s = parity_sign(m + n + 1) * sin_pi_ratio(t.b() * f.F3, D); break;
    default: throw std::invalid_argument("variant must be 1, 2 or 3");
  }
  const double Dd = static_cast<double>(D);
  return Dd * Dd * s /
         (2 * kPi * kPi * kPi * static_cast<double>(f.F1) * static_cast<double>(f.F2) *
          static_cast<double>(f.F3));
}

double coefficient_generic_real(double a, double b, double c, std::int64_t m, std::int64_t n) {
  const double D = a * c - b * b;
  const double alpha = a - b, gamma = c - b;
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  const double F0 = c * alpha * md + a * gamma * nd;
  const double F1 = c * md - b * nd;
  const double F2 = a * nd - b * md;
  const double F3 = gamma * md + alpha * nd;
  return D * D * std::sin(kPi * F0 / D) / (2 * kPi * kPi * kPi * F1 * F2 * F3);
}

QuadratureGrid::QuadratureGrid(const NormalizedTriple& nt, int grid_exponent)
    : exponent_(grid_exponent), n_(std::size_t{1} << grid_exponent) {
  check_grid_exponent(grid_exponent);
  const double a = static_cast<double>(nt.a()), b = static_cast<double>(nt.b()),
               c = static_cast<double>(nt.c());
  nodes_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    nodes_[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n_) - 0.5;
  }
  samples_.resize(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      double best = INFINITY;
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          const double x = nodes_[i] + di, y = nodes_[j] + dj;
          best = std::min(best, a * x * x + 2 * b * x * y + c * y * y);
        }
      }
      samples_[i * n_ + j] = best;
    }
  }
}

double QuadratureGrid::coefficient(std::int64_t m, std::int64_t n) const {
  CompensatedSum total;
  for (std::size_t i = 0; i < n_; ++i) {
    const double* row = &samples_[i * n_];
    for (std::size_t j = 0; j < n_; ++j) {
      total.add(row[j] * std::cos(2 * kPi * (static_cast<double>(m) * nodes_[i] +
                                              static_cast<double>(n) * nodes_[j])));
    }
  }
  return total.value() / static_cast<double>(n_ * n_);
}

std::vector<double> QuadratureGrid::coefficients(std::int64_t M) const {
  if (M < 0) {
    throw std::invalid_argument("order must be non-negative");
  }
  const std::size_t width = static_cast<std::size_t>(2 * M + 1);
  // cos(2 pi (m x + n y)) = cos(2 pi m x) cos(2 pi n y) - sin(2 pi m x) sin(2 pi n y);
  // first reduce every row against cos/sin(2 pi n y) for n = 0..M.
  std::vector<double> cos_tab(width * n_), sin_tab(width * n_);
  for (std::int64_t k = -M; k <= M; ++k) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double phase = 2 * kPi * static_cast<double>(k) * nodes_[j];
      cos_tab[static_cast<std::size_t>(k + M) * n_ + j] = std::cos(phase);
      sin_tab[static_cast<std::size_t>(k + M) * n_ + j] = std::sin(phase);
    }
  }
  const std::size_t half = static_cast<std::size_t>(M + 1);
  std::vector<double> row_cos(half * n_), row_sin(half * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* row = &samples_[i * n_];
    for (std::size_t k = 0; k < half; ++k) {
      const double* ct = &cos_tab[(k + static_cast<std::size_t>(M)) * n_];
      const double* st = &sin_tab[(k + static_cast<std::size_t>(M)) * n_];
      CompensatedSum sc, ss;
      for (std::size_t j = 0; j < n_; ++j) {
        sc.add(row[j] * ct[j]);
        ss.add(row[j] * st[j]);
      }
      row_cos[k * n_ + i] = sc.value();
      row_sin[k * n_ + i] = ss.value();
    }
  }
  std::vector<double> out(width * width);
  const double scale = static_cast<double>(n_) * static_cast<double>(n_);
  for (std::int64_t m = -M; m <= M; ++m) {
    const double* cm = &cos_tab[static_cast<std::size_t>(m + M) * n_];
    const double* sm = &sin_tab[static_cast<std::size_t>(m + M) * n_];
    for (std::int64_t n = 0; n <= M; ++n) {
      const std::size_t k = static_cast<std::size_t>(n);
      CompensatedSum acc;
      for (std::size_t i = 0; i < n_; ++i) {
        acc.add(cm[i] * row_cos[k * n_ + i] - sm[i] * row_sin[k * n_ + i]);
      }
      const double v = acc.value() / scale;
      out[static_cast<std::size_t>(m + M) * width + static_cast<std::size_t>(n + M)] = v;
      // The midpoint grid is symmetric under (x, y) -> (-x, -y), so the sine
      // transform vanishes and Lhat(-m, -n) = Lhat(m, n).
      out[static_cast<std::size_t>(-m + M) * width + static_cast<std::size_t>(-n + M)] = v;
    }
  }
  return out;
}

double quadrature_oracle(const NormalizedTriple& t, std::int64_t m, std::int64_t n, int grid_exponent) {
  return QuadratureGrid(t, grid_exponent).coefficient(m, n);
}

RichardsonEstimate quadrature_richardson(const NormalizedTriple& t, std::int64_t m, std::int64_t n,
                                         int grid_exponent) {
  check_grid_exponent(grid_exponent - 1);
  RichardsonEstimate r{};
  r.fine = quadrature_oracle(t, m, n, grid_exponent);
  r.coarse = quadrature_oracle(t, m, n, grid_exponent - 1);
  r.extrapolated = r.fine + (r.fine - r.coarse) / 3.0;
  return r;
}

FourierTable::FourierTable(const NormalizedTriple& t, std::int64_t M) : M_(M) {
  if (M < 1) {
    throw std::invalid_argument("partial sum order must be >= 1");
  }
  const std::size_t width = static_cast<std::size_t>(2 * M + 1);
  values_.resize(width * width);
  for (std::int64_t m = -M; m <= M; ++m) {
    for (std::int64_t n = -M; n <= M; ++n) {
      values_[static_cast<std::size_t>(m + M) * width + static_cast<std::size_t>(n + M)] =
          coefficient_value(t, m, n);
    }
  }
}

double FourierTable::at(std::int64_t m, std::int64_t n) const {
  const std::size_t width = static_cast<std::size_t>(2 * M_ + 1);
  return values_.at(static_cast<std::size_t>(m + M_) * width + static_cast<std::size_t>(n + M_));
}

double FourierTable::evaluate(const TorusPoint& p) const {
  const double x = p.x().get_d(), y = p.y().get_d();
  const std::size_t width = static_cast<std::size_t>(2 * M_ + 1);
  // e(m x + n y) = e(m x) e(n y); build both factor tables once.
  std::vector<double> cx(width), sx(width), cy(width), sy(width);
  for (std::int64_t k = -M_; k <= M_; ++k) {
    const auto idx = static_cast<std::size_t>(k + M_);
    cx[idx] = std::cos(2 * kPi * static_cast<double>(k) * x);
    sx[idx] = std::sin(2 * kPi * static_cast<double>(k) * x);
    cy[idx] = std::cos(2 * kPi * static_cast<double>(k) * y);
    sy[idx] = std::sin(2 * kPi * static_cast<double>(k) * y);
  }
  CompensatedSum total;
  for (std::size_t i = 0; i < width; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      total.add(values_[i * width + j] * (cx[i] * cy[j] - sx[i] * sy[j]));
    }
  }
  return total.value();
}

double partial_sum(const NormalizedTriple& t, const TorusPoint& p, std::int64_t M) {
  return FourierTable(t, M).evaluate(p);
}

LimitReport limit_consistency(const NormalizedTriple& limit, std::int64_t m, std::int64_t n,
                              std::array<double, 3> direction, std::span<const double> steps,
                              double tolerance_factor) {
  const CoefficientCase limit_case = classify_index(limit.triple(), m, n);
  if (limit_case == CoefficientCase::Generic || limit_case == CoefficientCase::ZeroIndex) {
    throw std::invalid_argument("limit triple does not make any F_i(m, n) vanish");
  }
  if (steps.empty()) {
    throw std::invalid_argument("empty step sequence");
  }
  LimitReport report;
  report.limit_case = limit_case;
  report.limit_value = coefficient(limit, m, n).value;
  const double a0 = static_cast<double>(limit.a()), b0 = static_cast<double>(limit.b()),
               c0 = static_cast<double>(limit.c());
  for (double h : steps) {
    const double a = a0 + h * direction[0], b = b0 + h * direction[1], c = c0 + h * direction[2];
    const double md = static_cast<double>(m), nd = static_cast<double>(n);
    const double F1 = c * md - b * nd, F2 = a * nd - b * md, F3 = (c - b) * md + (a - b) * nd;
    if (F1 == 0.0 || F2 == 0.0 || F3 == 0.0) {
      throw std::invalid_argument("perturbed triple is itself degenerate at this index");
    }
    const double v = coefficient_generic_real(a, b, c, m, n);
    report.steps.push_back(h);
    report.generic_values.push_back(v);
    report.errors.push_back(std::abs(v - report.limit_value));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < report.errors.size(); ++i) {
    decreasing = decreasing && report.errors[i] < report.errors[i - 1];
  }
  report.converged =
      decreasing && report.errors.back() <= tolerance_factor * std::abs(report.steps.back());
  return report;
}

}  // namespace bernheight
