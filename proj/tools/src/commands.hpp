#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bernheight/scenario.hpp"
#include "table.hpp"

namespace bernheight::cli {

/// Bad arguments; maps to exit status 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool oracle = false;
  int grid_exponent = 11;
  std::int64_t trials = 100;
  bool trials_given = false;
};

struct CommandResult {
  Table table;
  /// False when a check that should always pass did not.
  bool ok = true;
};

CommandResult cmd_reduce(std::int64_t a, std::int64_t b, std::int64_t c);
CommandResult cmd_eval_l(std::int64_t a, std::int64_t b, std::int64_t c, const std::string& x,
                         const std::string& y);
CommandResult cmd_fourier(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t M, const Options& opt);
CommandResult cmd_hexagon(std::int64_t a, std::int64_t b, std::int64_t c);
CommandResult cmd_avg_d(std::int64_t a, std::int64_t b, std::int64_t c, const std::string& x,
                        const std::string& y, std::int64_t d);

struct LocalBoundsConfig {
  std::int64_t a = 0, b = 0, c = 0;
  std::int64_t d = 0;  // 0: smallest valid level, 2 Delta
  std::int64_t points = 10;
  std::int64_t pigeonhole_points = 300;
};

CommandResult cmd_local_bounds(const LocalBoundsConfig& cfg, const Options& opt);

/// q: rows separated by ';', entries by ','; w and n: comma lists.
CommandResult cmd_theta(const std::string& q, const std::string& w, const std::string& n);

/// The scenario's seed and trial count are replaced by --seed / --trials when given.
CommandResult cmd_simulate(const ScenarioConfig& cfg, const Options& opt);

CommandResult cmd_holder(double alpha, double beta, const std::vector<double>& e);

}  // namespace bernheight::cli
