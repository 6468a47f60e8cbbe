#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bernheight/global_model.hpp"

namespace bernheight {

enum class ProfileKind { Fixed, RandomPartition };

/// Simulation setup read from a `key = value` text file:
///
///   id = three-places
///   place = v1 1 0 1          # repeatable: id a b c (normalized on load)
///   place = v2 2 1 2
///   v0 = v1                   # default: first place
///   profile = random-partition   # or fixed
///   ramification = 3,2        # fixed profile only; n defaults to the sum
///   n = 3..50                 # range, comma list, or single value
///   points = 2000             # size of the initial random set
///   max_subset = 40
///   d = 18                    # default 2 lcm Delta_v
///   seed = 7
///   trials = 5
///   nu = 2
///
/// Blank lines and text after '#' are ignored.
struct ScenarioConfig {
  std::string id = "scenario";
  std::vector<PlaceModel> places;
  std::string v0;
  ProfileKind profile = ProfileKind::Fixed;
  std::vector<std::int64_t> ramification;
  std::vector<std::int64_t> degrees;
  std::int64_t points = 2000;
  std::size_t max_subset = 40;
  std::optional<std::int64_t> d;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> trials;
  std::int64_t nu = 2;

  std::int64_t torsion_level() const;
};

/// Throws std::invalid_argument with the offending line number on malformed input.
ScenarioConfig parse_scenario(std::istream& in);
ScenarioConfig parse_scenario_text(std::string_view text);

struct ScenarioRow {
  std::string scenario;
  std::int64_t trial = 0;
  std::int64_t n = 0;
  std::int64_t N = 0;
  Rational lhs;  // the global double average
  TheoremEstimates estimates;
  ExtensionProfile profile{1, {}};
  bool holds() const { return estimates.holds(); }
};

/// Random engine for one (n, trial) cell, independent of evaluation order.
std::mt19937_64 trial_engine(std::uint64_t seed, std::int64_t n, std::int64_t trial);

/// Draws the profile and points, selects a pigeonhole cell at v0, thins it with the greedy
/// selection against a random conflict oracle respecting nu, truncates to max_subset,
/// and evaluates the double average and the estimates.
ScenarioRow run_trial(const ScenarioConfig& cfg, std::int64_t n, std::int64_t trial);

/// All (n, trial) cells in order of n, then trial.
std::vector<ScenarioRow> run_scenario(const ScenarioConfig& cfg, std::int64_t trials);

}  // namespace bernheight
