#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bernheight/local_height.hpp"
#include "bernheight/quadform.hpp"
#include "bernheight/rational.hpp"

namespace bernheight {

/// A place of bad (totally split multiplicative) reduction.
struct PlaceModel {
  std::string id;
  NormalizedTriple triple;
};

/// Ramification indices e_w of the places w above each v; they sum to n at every place.
class ExtensionProfile {
 public:
  /// Throws std::invalid_argument if some list is empty, has a non-positive entry,
  /// or does not sum to n.
  ExtensionProfile(std::int64_t n, std::map<std::string, std::vector<std::int64_t>> per_place);

  /// Every place unramified into a single branch of index n.
  static ExtensionProfile single_branch(std::int64_t n, std::span<const PlaceModel> places);

  std::int64_t n() const { return n_; }
  /// Throws std::out_of_range for an unknown place.
  const std::vector<std::int64_t>& branches(const std::string& place_id) const;
  const std::map<std::string, std::vector<std::int64_t>>& per_place() const { return per_place_; }

  /// Throws std::invalid_argument unless there is exactly one entry per place.
  void check_covers(std::span<const PlaceModel> places) const;

 private:
  std::int64_t n_;
  std::map<std::string, std::vector<std::int64_t>> per_place_;
};

/// One integer lift per point at each place; index k refers to the same point everywhere.
class GlobalPointSet {
 public:
  /// Throws std::invalid_argument on empty input or ragged sizes.
  explicit GlobalPointSet(std::vector<std::vector<IntegerLift>> per_place);

  std::size_t places() const { return lifts_.size(); }
  std::size_t size() const { return lifts_.front().size(); }
  const std::vector<IntegerLift>& lifts(std::size_t place) const { return lifts_.at(place); }

  /// The points with the given indices, at every place.
  GlobalPointSet subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<std::vector<IntegerLift>> lifts_;
};

/// d = 2 lcm_v Delta(a_v, b_v, c_v). Throws std::invalid_argument on an empty list.
std::int64_t compute_d(std::span<const PlaceModel> places);

/// (e a, e b, e c); still normalized.
NormalizedTriple scaled_place(const PlaceModel& p, std::int64_t e);

/// Torus images of the lifts at one place.
std::vector<TorusPoint> torus_points(const PlaceModel& p, std::span<const IntegerLift> lifts);

struct GlobalAverage {
  /// (1/n) sum_v sum_{w|v} Avg_{P != Q} Avg_d lambda_w(P - Q).
  Rational total;
  /// (1/n) sum_{w|v} for each place, in input order.
  std::vector<Rational> per_place;
  /// Un-normalized pair averages at the scaled triple of every branch.
  std::vector<std::vector<Rational>> per_branch;
};

/// Every branch w | v uses the triple e_w (a_v, b_v, c_v) and lifts e_w (u, v), so the
/// torus coordinates are the same at all branches of a place.
/// Throws std::invalid_argument if the profile or point set does not match the places,
/// fewer than two points are given, or d is not valid for every place.
GlobalAverage global_double_average(std::span<const PlaceModel> places, const ExtensionProfile& profile,
                                    const GlobalPointSet& points, std::int64_t d);

struct TheoremEstimates {
  std::size_t v0 = 0;  // index into places
  std::size_t w0 = 0;  // index of the first maximal e_w above v0
  Rational C1, C2, C3, C4;
  Rational est1, est2, est3;
  Rational part1, part2, part3;  // the matching pieces of the double average
  double combined = 0.0;         // (C1^2 C2 n)^(1/3) / n - (C3 + C4) / (N - 1)
  bool est1_ok = false, est2_ok = false, est3_ok = false;
  bool chain_ok = false;     // total >= est1 + est2 + est3
  bool combined_ok = false;  // est1 + est2 + est3 >= combined (within 1e-9)
  bool holds() const { return est1_ok && est2_ok && est3_ok && chain_ok && combined_ok; }
};

/// The three lower bounds for the pieces of the double average:
///   est1 = C1 e_{w0} / n,
///   est2 = (C2 / n) sum_{w | v0, w != w0} 1 / e_w - C3 / (N - 1),
///   est3 = -C4 / (N - 1),
/// with C1 = xi_0 / (144 d^2), C2 = (alpha_0 + gamma_0 + b_0) / (24 d^2 D_0),
/// C3 = xi_0 / (24 d^2) and C4 = sum_{v != v0} xi_v / (24 d^2).
/// est1 needs the points to share a cube cell at v0 (see pigeonhole_subset).
/// Throws std::invalid_argument for an unknown v0 or n < 3.
TheoremEstimates theorem_estimates(std::span<const PlaceModel> places, const ExtensionProfile& profile,
                                   const GlobalPointSet& points, std::int64_t d, const std::string& v0,
                                   const GlobalAverage& average);

struct HolderCheck {
  double lhs;  // alpha e0 + beta sum_{i >= 1} 1 / e_i with e0 = max e
  double rhs;  // (alpha^2 beta n)^(1/3), n = sum e
  bool holds;  // lhs >= rhs up to 1e-12 relative
};

/// Throws std::invalid_argument unless alpha, beta > 0, e is non-empty and positive,
/// and n^2 >= beta / alpha.
HolderCheck holder_bound(double alpha, double beta, std::span<const double> e);

class OracleViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// hits(i, j) for i < j: the later index j conflicts with anchor i.
using ConflictOracle = std::function<bool(std::size_t, std::size_t)>;

/// Repeatedly keeps the first surviving index and discards the later survivors it
/// conflicts with. Throws OracleViolation if an anchor has more than nu conflicts, and
/// std::invalid_argument if nu < 2.
std::vector<std::size_t> greedy_torsion_avoid(std::size_t N, const ConflictOracle& hits, std::int64_t nu);

}  // namespace bernheight
