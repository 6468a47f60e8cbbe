#include "bernheight/local_height.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bernheight/bernoulli.hpp"
#include "bernheight/fourier.hpp"

namespace bernheight {

namespace {

struct Gcds {
  std::int64_t cb, ab, ag;
};

Gcds gcds(const QuadTriple& t) {
  // ag only matters when b != 0; with b = 0 it is gcd(a, c) which is still positive.
  return {std::gcd(t.c(), t.b()), std::gcd(t.a(), t.b()), std::gcd(t.alpha(), t.gamma())};
}

// The three scaled linear coordinates whose B2 values make up the closed form.
std::array<Rational, 3> cube_coordinates(const QuadTriple& t, const TorusPoint& p, std::int64_t d) {
  const Gcds g = gcds(t);
  const Rational& x = p.x();
  const Rational& y = p.y();
  const Rational dz = make_rational(d);
  return {dz * (make_rational(t.b()) * x + make_rational(t.c()) * y) / make_rational(g.cb),
          dz * (make_rational(t.a()) * x + make_rational(t.b()) * y) / make_rational(g.ab),
          dz * (make_rational(t.alpha()) * x - make_rational(t.gamma()) * y) / make_rational(g.ag)};
}

std::array<Rational, 3> closed_form_weights(const QuadTriple& t, std::int64_t d) {
  const Gcds g = gcds(t);
  const Rational denom = make_rational(t.discriminant()) * make_rational(d) * make_rational(d);
  return {make_rational(t.alpha() * g.cb * g.cb) / denom, make_rational(t.gamma() * g.ab * g.ab) / denom,
          make_rational(t.b() * g.ag * g.ag) / denom};
}

Rational bernoulli_part(const QuadTriple& t, const TorusPoint& p, std::int64_t d,
                        const std::array<Rational, 3>& weights) {
  const auto coords = cube_coordinates(t, p, d);
  Rational out = weights[0] * b2(coords[0]) + weights[1] * b2(coords[1]);
  if (t.b() != 0) {
    out += weights[2] * b2(coords[2]);
  }
  out.canonicalize();
  return out;
}

}  // namespace

RationalPoint lift_coordinates(const QuadTriple& t, const IntegerLift& lift) {
  const std::int64_t D = t.discriminant();
  Rational x = make_rational(t.c() * lift.u - t.b() * lift.v, D);
  Rational y = make_rational(-t.b() * lift.u + t.a() * lift.v, D);
  return {x, y};
}

TorusPoint lift_to_torus(const QuadTriple& t, const IntegerLift& lift) {
  const RationalPoint r = lift_coordinates(t, lift);
  return {r.x, r.y};
}

LocalPointSet::LocalPointSet(NormalizedTriple place, std::vector<IntegerLift> lifts)
    : place_(std::move(place)), lifts_(std::move(lifts)) {
  points_.reserve(lifts_.size());
  for (const IntegerLift& l : lifts_) {
    points_.push_back(lift_to_torus(place_.triple(), l));
  }
  std::vector<std::pair<Rational, Rational>> keys;
  keys.reserve(points_.size());
  for (const TorusPoint& p : points_) keys.emplace_back(p.x(), p.y());
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("lifts must give distinct torus points");
  }
}

bool DAverageParams::is_valid(std::int64_t d, const QuadTriple& t) {
  return d > 0 && d % 2 == 0 && d % (2 * delta(t)) == 0;
}

DAverageParams::DAverageParams(std::int64_t d, const QuadTriple& t) : d_(d) {
  if (!is_valid(d, t)) {
    throw std::invalid_argument("d = " + std::to_string(d) + " must be a positive multiple of 2*Delta = " +
                                std::to_string(2 * delta(t)));
  }
}

Rational mean_of_L(const QuadTriple& t) { return zero_coefficient(t); }

LocalHeight bernoulli_local_height(const NormalizedTriple& t, const TorusPoint& p) {
  LocalHeight h;
  h.quarter_L = eval_L_value(t, p) / 4;
  h.quarter_mean = mean_of_L(t.triple()) / 4;
  h.value = h.quarter_L - h.quarter_mean;
  return h;
}

AvgDClosedForm avg_d_closed_form(const NormalizedTriple& t, const TorusPoint& p,
                                 const DAverageParams& d) {
  AvgDClosedForm out;
  out.mean_term = mean_of_L(t.triple());
  out.bernoulli_part = bernoulli_part(t.triple(), p, d.d(), closed_form_weights(t.triple(), d.d()));
  out.total = out.mean_term + out.bernoulli_part;
  return out;
}

Rational avg_d_local_height(const NormalizedTriple& t, const TorusPoint& p, const DAverageParams& d) {
  return avg_d_closed_form(t, p, d).bernoulli_part / 4;
}

Rational pair_average(const NormalizedTriple& t, std::span<const TorusPoint> points,
                      const DAverageParams& d, AverageMethod method) {
  const std::size_t N = points.size();
  if (N < 2) {
    throw std::invalid_argument("pair average needs at least two points");
  }
  const QuadTriple& q = t.triple();
  const auto weights = closed_form_weights(q, d.d());
  const Rational mean = mean_of_L(q);
  Rational sum = 0;
  // lambda(P - Q) = lambda(Q - P), so each unordered pair counts twice.
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      const TorusPoint diff = points[i] - points[j];
      if (method == AverageMethod::ClosedForm) {
        sum += bernoulli_part(q, diff, d.d(), weights);
      } else {
        sum += avg_d_direct(t, diff, d.d()) - mean;
      }
    }
  }
  Rational out = sum * 2 / (4 * Rational(static_cast<long>(N * N - N)));
  out.canonicalize();
  return out;
}

Rational fourier_avg_rhs(const QuadTriple& t, std::int64_t d, std::int64_t N) {
  if (N < 2) {
    throw std::invalid_argument("need N >= 2");
  }
  Rational r = (make_rational(t.alpha() + t.gamma() + t.b(), t.discriminant()) -
                xi(t) / make_rational(N - 1)) /
               make_rational(24 * d * d);
  r.canonicalize();
  return r;
}

FourierAvgBound fourier_avg_lower_bound(const NormalizedTriple& t, std::span<const TorusPoint> points,
                                        const DAverageParams& d, AverageMethod method) {
  FourierAvgBound out;
  out.lhs = pair_average(t, points, d, method);
  out.rhs = fourier_avg_rhs(t.triple(), d.d(), static_cast<std::int64_t>(points.size()));
  out.holds = out.lhs >= out.rhs;
  return out;
}

FourierAvgBound fourier_avg_lower_bound(const LocalPointSet& S, const DAverageParams& d,
                                        AverageMethod method) {
  return fourier_avg_lower_bound(S.place(), S.points(), d, method);
}

std::array<int, 3> cube_cell(const NormalizedTriple& t, const TorusPoint& p, std::int64_t d) {
  const auto coords = cube_coordinates(t.triple(), p, d);
  std::array<int, 3> cell{};
  for (std::size_t k = 0; k < 3; ++k) {
    cell[k] = static_cast<int>(to_int64(floor_of(frac(coords[k]) * 6)));
  }
  return cell;
}

PigeonholeResult pigeonhole_subset(const NormalizedTriple& t, std::span<const TorusPoint> points,
                                   const DAverageParams& d) {
  if (points.empty()) {
    throw std::invalid_argument("pigeonhole selection needs at least one point");
  }
  std::map<std::array<int, 3>, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < points.size(); ++i) {
    cells[cube_cell(t, points[i], d.d())].push_back(i);
  }
  PigeonholeResult out;
  // std::map iterates cells in lexicographic order, so the first maximum wins ties.
  for (const auto& [cell, members] : cells) {
    if (members.size() > out.indices.size()) {
      out.indices = members;
      out.cell = cell;
    }
  }
  out.bound = xi(t.triple()) / make_rational(144 * d.d() * d.d());
  out.bound.canonicalize();
  const std::size_t N = points.size();
  out.size_ok = out.indices.size() >= (N + 215) / 216;
  bool pairs_ok = true;
  const auto weights = closed_form_weights(t.triple(), d.d());
  // Only distinct points matter: a pair of equal points has difference zero.
  std::map<std::pair<Rational, Rational>, std::size_t> distinct;
  for (std::size_t k : out.indices) ++distinct[{points[k].x(), points[k].y()}];
  std::vector<TorusPoint> reps;
  bool repeated = false;
  for (const auto& [xy, count] : distinct) {
    reps.emplace_back(xy.first, xy.second);
    repeated = repeated || count > 1;
  }
  auto visit = [&](const TorusPoint& diff) {
    const Rational h = bernoulli_part(t.triple(), diff, d.d(), weights) / 4;
    if (!out.min_pair_average || h < *out.min_pair_average) out.min_pair_average = h;
    pairs_ok = pairs_ok && h >= out.bound;
  };
  if (repeated) visit(TorusPoint());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) visit(reps[i] - reps[j]);
  }
  out.holds = out.size_ok && pairs_ok;
  return out;
}

PigeonholeResult pigeonhole_subset(const LocalPointSet& S, const DAverageParams& d) {
  return pigeonhole_subset(S.place(), S.points(), d);
}

}  // namespace bernheight
