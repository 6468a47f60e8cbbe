#include "bernheight/global_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bernheight {

ExtensionProfile::ExtensionProfile(std::int64_t n, std::map<std::string, std::vector<std::int64_t>> per_place)
    : n_(n), per_place_(std::move(per_place)) {
  if (n_ < 1) {
    throw std::invalid_argument("extension degree must be >= 1");
  }
  for (const auto& [id, es] : per_place_) {
    if (es.empty()) {
      throw std::invalid_argument("place " + id + " has no branches");
    }
    std::int64_t sum = 0;
    for (std::int64_t e : es) {
      if (e < 1) throw std::invalid_argument("ramification indices must be positive");
      sum += e;
    }
    if (sum != n_) {
      throw std::invalid_argument("ramification indices at " + id + " sum to " + std::to_string(sum) +
                                  ", expected " + std::to_string(n_));
    }
  }
}

ExtensionProfile ExtensionProfile::single_branch(std::int64_t n, std::span<const PlaceModel> places) {
  std::map<std::string, std::vector<std::int64_t>> m;
  for (const auto& p : places) m[p.id] = {n};
  return ExtensionProfile(n, std::move(m));
}

const std::vector<std::int64_t>& ExtensionProfile::branches(const std::string& place_id) const {
  auto it = per_place_.find(place_id);
  if (it == per_place_.end()) {
    throw std::out_of_range("no ramification data for place " + place_id);
  }
  return it->second;
}

void ExtensionProfile::check_covers(std::span<const PlaceModel> places) const {
  if (places.size() != per_place_.size()) {
    throw std::invalid_argument("profile and place list disagree");
  }
  for (const auto& p : places) {
    if (!per_place_.contains(p.id)) {
      throw std::invalid_argument("profile lacks place " + p.id);
    }
  }
}

GlobalPointSet::GlobalPointSet(std::vector<std::vector<IntegerLift>> per_place) : lifts_(std::move(per_place)) {
  if (lifts_.empty()) {
    throw std::invalid_argument("point set needs at least one place");
  }
  for (const auto& l : lifts_) {
    if (l.size() != lifts_.front().size()) {
      throw std::invalid_argument("every place needs one lift per point");
    }
  }
}

GlobalPointSet GlobalPointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<std::vector<IntegerLift>> out(lifts_.size());
  for (std::size_t v = 0; v < lifts_.size(); ++v) {
    for (std::size_t k : indices) out[v].push_back(lifts_[v].at(k));
  }
  return GlobalPointSet(std::move(out));
}

std::int64_t compute_d(std::span<const PlaceModel> places) {
  if (places.empty()) {
    throw std::invalid_argument("need at least one place");
  }
  std::int64_t l = 1;
  for (const auto& p : places) l = std::lcm(l, delta(p.triple.triple()));
  return 2 * l;
}

NormalizedTriple scaled_place(const PlaceModel& p, std::int64_t e) { return p.triple.scaled(e); }

std::vector<TorusPoint> torus_points(const PlaceModel& p, std::span<const IntegerLift> lifts) {
  std::vector<TorusPoint> out;
  out.reserve(lifts.size());
  for (const auto& l : lifts) out.push_back(lift_to_torus(p.triple.triple(), l));
  return out;
}

GlobalAverage global_double_average(std::span<const PlaceModel> places, const ExtensionProfile& profile,
                                    const GlobalPointSet& points, std::int64_t d) {
  profile.check_covers(places);
  if (points.places() != places.size()) {
    throw std::invalid_argument("point set and place list disagree");
  }
  if (points.size() < 2) {
    throw std::invalid_argument("need at least two points");
  }
  GlobalAverage out;
  out.total = 0;
  const Rational n = make_rational(profile.n());
  for (std::size_t v = 0; v < places.size(); ++v) {
    const PlaceModel& place = places[v];
    std::map<std::int64_t, Rational> by_e;
    std::vector<Rational> branch_values;
    Rational place_sum = 0;
    for (std::int64_t e : profile.branches(place.id)) {
      auto it = by_e.find(e);
      if (it == by_e.end()) {
        const NormalizedTriple tw = scaled_place(place, e);
        const DAverageParams dp(d, tw.triple());
        std::vector<TorusPoint> pts;
        pts.reserve(points.size());
        for (const IntegerLift& l : points.lifts(v)) {
          pts.push_back(lift_to_torus(tw.triple(), {e * l.u, e * l.v}));
        }
        it = by_e.emplace(e, pair_average(tw, pts, dp)).first;
      }
      branch_values.push_back(it->second);
      place_sum += it->second;
    }
    Rational scaled = place_sum / n;
    scaled.canonicalize();
    out.per_place.push_back(scaled);
    out.per_branch.push_back(std::move(branch_values));
    out.total += scaled;
  }
  out.total.canonicalize();
  return out;
}

TheoremEstimates theorem_estimates(std::span<const PlaceModel> places, const ExtensionProfile& profile,
                                   const GlobalPointSet& points, std::int64_t d, const std::string& v0,
                                   const GlobalAverage& average) {
  auto it = std::find_if(places.begin(), places.end(), [&](const PlaceModel& p) { return p.id == v0; });
  if (it == places.end()) {
    throw std::invalid_argument("unknown place " + v0);
  }
  if (profile.n() < 3) {
    throw std::invalid_argument("the combined bound needs n >= 3");
  }
  TheoremEstimates out;
  out.v0 = static_cast<std::size_t>(it - places.begin());
  const QuadTriple& t0 = it->triple.triple();
  const auto& es = profile.branches(v0);
  out.w0 = static_cast<std::size_t>(std::max_element(es.begin(), es.end()) - es.begin());

  const Rational d2 = make_rational(d * d);
  const Rational n = make_rational(profile.n());
  const Rational Nm1 = make_rational(static_cast<std::int64_t>(points.size()) - 1);
  out.C1 = xi(t0) / (144 * d2);
  out.C2 = make_rational(t0.alpha() + t0.gamma() + t0.b()) / (24 * d2 * make_rational(t0.discriminant()));
  out.C3 = xi(t0) / (24 * d2);
  out.C4 = 0;
  for (std::size_t v = 0; v < places.size(); ++v) {
    if (v != out.v0) out.C4 += xi(places[v].triple.triple()) / (24 * d2);
  }
  Rational inv_sum = 0;
  for (std::size_t w = 0; w < es.size(); ++w) {
    if (w != out.w0) inv_sum += make_rational(1, es[w]);
  }
  out.est1 = out.C1 * make_rational(es[out.w0]) / n;
  out.est2 = out.C2 / n * inv_sum - out.C3 / Nm1;
  out.est3 = -out.C4 / Nm1;

  const auto& branch0 = average.per_branch.at(out.v0);
  out.part1 = branch0.at(out.w0) / n;
  out.part2 = 0;
  for (std::size_t w = 0; w < branch0.size(); ++w) {
    if (w != out.w0) out.part2 += branch0[w];
  }
  out.part2 /= n;
  out.part3 = 0;
  for (std::size_t v = 0; v < places.size(); ++v) {
    if (v != out.v0) out.part3 += average.per_place[v];
  }
  for (Rational* r : {&out.C1, &out.C2, &out.C3, &out.C4, &out.est1, &out.est2, &out.est3, &out.part1,
                      &out.part2, &out.part3}) {
    r->canonicalize();
  }
  out.est1_ok = out.part1 >= out.est1;
  out.est2_ok = out.part2 >= out.est2;
  out.est3_ok = out.part3 >= out.est3;
  const Rational est_sum = out.est1 + out.est2 + out.est3;
  out.chain_ok = average.total >= est_sum;
  const double nd = static_cast<double>(profile.n());
  out.combined = std::cbrt(out.C1.get_d() * out.C1.get_d() * out.C2.get_d() * nd) / nd -
                 Rational(out.C3 + out.C4).get_d() / Nm1.get_d();
  out.combined_ok = est_sum.get_d() + 1e-9 >= out.combined;
  return out;
}

HolderCheck holder_bound(double alpha, double beta, std::span<const double> e) {
  if (!(alpha > 0) || !(beta > 0)) {
    throw std::invalid_argument("alpha and beta must be positive");
  }
  if (e.empty()) {
    throw std::invalid_argument("need at least one e_i");
  }
  double n = 0.0;
  for (double x : e) {
    if (!(x > 0)) throw std::invalid_argument("e_i must be positive");
    n += x;
  }
  if (n * n < beta / alpha) {
    throw std::invalid_argument("precondition n^2 >= beta / alpha fails");
  }
  const auto top = std::max_element(e.begin(), e.end());
  double rest = 0.0;
  for (auto it = e.begin(); it != e.end(); ++it) {
    if (it != top) rest += 1.0 / *it;
  }
  HolderCheck out;
  out.lhs = alpha * *top + beta * rest;
  out.rhs = std::cbrt(alpha * alpha * beta * n);
  out.holds = out.lhs >= out.rhs - 1e-12 * std::max(1.0, std::abs(out.rhs));
  return out;
}

std::vector<std::size_t> greedy_torsion_avoid(std::size_t N, const ConflictOracle& hits, std::int64_t nu) {
  if (nu < 2) {
    throw std::invalid_argument("nu must be >= 2");
  }
  std::vector<bool> alive(N, true);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < N; ++i) {
    if (!alive[i]) continue;
    kept.push_back(i);
    std::int64_t count = 0;
    for (std::size_t j = i + 1; j < N; ++j) {
      if (!hits(i, j)) continue;
      if (++count > nu) {
        throw OracleViolation("anchor " + std::to_string(i) + " has more than " + std::to_string(nu) +
                              " conflicts");
      }
      alive[j] = false;
    }
  }
  return kept;
}

}  // namespace bernheight
