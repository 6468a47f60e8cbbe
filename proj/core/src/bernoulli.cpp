#include "bernheight/bernoulli.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace bernheight {

Rational b2(const Rational& x) {
  const Rational f = frac(x);
  Rational r = f * f - f + Rational(1, 6);
  r.canonicalize();
  return r;
}

double b2_fourier_partial(const Rational& x, std::int64_t K) {
  if (K < 1) {
    throw std::invalid_argument("K must be >= 1");
  }
  // Only {x} matters; keep the phase argument small.
  const double f = to_double(frac(x));
  double sum = 0.0;
  for (std::int64_t k = K; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    sum += std::cos(2 * std::numbers::pi * kd * f) / (kd * kd);
  }
  return sum / (std::numbers::pi * std::numbers::pi);
}

DistributionCheck b2_distribution(const Rational& x, std::int64_t N) {
  if (N < 1) {
    throw std::invalid_argument("N must be >= 1");
  }
  DistributionCheck out;
  Rational sum = 0;
  for (std::int64_t j = 0; j < N; ++j) {
    sum += b2(x + make_rational(j, N));
  }
  out.lhs = sum / make_rational(N);
  out.rhs = b2(x * make_rational(N)) / make_rational(N * N);
  out.lhs.canonicalize();
  out.rhs.canonicalize();
  return out;
}

RationalGridSet::RationalGridSet(std::int64_t R, std::vector<Rational> elements)
    : R_(R), elements_(std::move(elements)) {
  if (R_ < 1) {
    throw std::invalid_argument("R must be >= 1");
  }
  std::set<Integer> residues;
  const Integer Rz = make_integer(R_);
  for (const Rational& t : elements_) {
    if (!mpz_divisible_p(Rz.get_mpz_t(), t.get_den_mpz_t())) {
      throw std::invalid_argument("element " + to_string(t) + " has denominator not dividing R");
    }
    Rational scaled = frac(t) * Rational(Rz);
    scaled.canonicalize();
    if (!residues.insert(scaled.get_num()).second) {
      throw std::invalid_argument("elements must be distinct modulo 1");
    }
  }
}

FejerCheck fejer_lower_bound(const RationalGridSet& T) {
  const auto& el = T.elements();
  const std::int64_t N = static_cast<std::int64_t>(el.size());
  if (N < 2) {
    throw std::invalid_argument("need at least two elements");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i != j) sum += b2(el[i] - el[j]);
    }
  }
  FejerCheck out;
  out.average = sum / make_rational(N * N - N);
  out.bound = make_rational(1, 6 * T.R() * T.R()) - make_rational(1, 6 * (N - 1));
  out.average.canonicalize();
  out.bound.canonicalize();
  out.holds = out.average >= out.bound;
  return out;
}

double fejer_character_sum(const RationalGridSet& T, std::int64_t K) {
  const auto& el = T.elements();
  const double N = static_cast<double>(el.size());
  if (el.size() < 2) {
    throw std::invalid_argument("need at least two elements");
  }
  std::vector<double> phases;
  phases.reserve(el.size());
  for (const Rational& t : el) phases.push_back(to_double(frac(t)));
  double sum = 0.0;
  for (std::int64_t k = K; k >= 1; --k) {
    double re = 0.0, im = 0.0;
    for (double t : phases) {
      re += std::cos(2 * std::numbers::pi * static_cast<double>(k) * t);
      im += std::sin(2 * std::numbers::pi * static_cast<double>(k) * t);
    }
    const double kd = static_cast<double>(k);
    // k and -k contribute equally.
    sum += 2.0 * (re * re + im * im - N) / (kd * kd);
  }
  return sum / (2 * std::numbers::pi * std::numbers::pi * (N * N - N));
}

}  // namespace bernheight
