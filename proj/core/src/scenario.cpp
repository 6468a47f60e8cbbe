#include "bernheight/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bernheight {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view s, const std::string& what) {
  s = trim(s);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad " + what + ": '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::int64_t> parse_list(std::string_view s, const std::string& what) {
  std::vector<std::int64_t> out;
  const auto dots = s.find("..");
  if (dots != std::string_view::npos) {
    const auto lo = parse_number<std::int64_t>(s.substr(0, dots), what);
    const auto hi = parse_number<std::int64_t>(s.substr(dots + 2), what);
    if (lo > hi) throw std::invalid_argument("empty range for " + what);
    for (std::int64_t k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_number<std::int64_t>(s.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

PlaceModel parse_place(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::string id;
  std::int64_t a = 0, b = 0, c = 0;
  std::string extra;
  if (!(in >> id >> a >> b >> c) || (in >> extra)) {
    throw std::invalid_argument("place needs 'id a b c'");
  }
  return {id, normalize(QuadTriple(a, b, c))};
}

ExtensionProfile draw_profile(const ScenarioConfig& cfg, std::int64_t n, std::mt19937_64& rng) {
  std::map<std::string, std::vector<std::int64_t>> per_place;
  for (const auto& p : cfg.places) {
    std::vector<std::int64_t> es;
    if (cfg.profile == ProfileKind::Fixed) {
      es = cfg.ramification.empty() ? std::vector<std::int64_t>{n} : cfg.ramification;
    } else {
      std::int64_t rem = n;
      while (rem > 0) {
        const std::int64_t e = std::uniform_int_distribution<std::int64_t>(1, rem)(rng);
        es.push_back(e);
        rem -= e;
      }
      std::sort(es.rbegin(), es.rend());
    }
    per_place[p.id] = std::move(es);
  }
  return ExtensionProfile(n, std::move(per_place));
}

}  // namespace

std::int64_t ScenarioConfig::torsion_level() const { return d ? *d : compute_d(places); }

ScenarioConfig parse_scenario(std::istream& in) {
  ScenarioConfig cfg;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key(trim(view.substr(0, eq)));
    const std::string_view value = trim(view.substr(eq + 1));
    if (key != "place" && !seen.insert(key).second) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate key " + key);
    }
    try {
      if (key == "id") {
        cfg.id = std::string(value);
      } else if (key == "place") {
        cfg.places.push_back(parse_place(value));
      } else if (key == "v0") {
        cfg.v0 = std::string(value);
      } else if (key == "profile") {
        if (value == "fixed") {
          cfg.profile = ProfileKind::Fixed;
        } else if (value == "random-partition") {
          cfg.profile = ProfileKind::RandomPartition;
        } else {
          throw std::invalid_argument("profile must be fixed or random-partition");
        }
      } else if (key == "ramification") {
        cfg.ramification = parse_list(value, key);
      } else if (key == "n") {
        cfg.degrees = parse_list(value, key);
        have_n = true;
      } else if (key == "points") {
        cfg.points = parse_number<std::int64_t>(value, key);
      } else if (key == "max_subset") {
        cfg.max_subset = parse_number<std::size_t>(value, key);
      } else if (key == "d") {
        cfg.d = parse_number<std::int64_t>(value, key);
      } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(value, key);
      } else if (key == "trials") {
        cfg.trials = parse_number<std::int64_t>(value, key);
      } else if (key == "nu") {
        cfg.nu = parse_number<std::int64_t>(value, key);
      } else {
        throw std::invalid_argument("unknown key " + key);
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }

  if (cfg.places.empty()) throw std::invalid_argument("scenario lists no places");
  std::set<std::string> ids;
  for (const auto& p : cfg.places) {
    if (!ids.insert(p.id).second) throw std::invalid_argument("duplicate place id " + p.id);
  }
  if (cfg.v0.empty()) cfg.v0 = cfg.places.front().id;
  if (!ids.contains(cfg.v0)) throw std::invalid_argument("v0 names an unknown place");
  if (!cfg.ramification.empty()) {
    if (cfg.profile != ProfileKind::Fixed) {
      throw std::invalid_argument("ramification is only meaningful with profile = fixed");
    }
    std::int64_t sum = 0;
    for (std::int64_t e : cfg.ramification) {
      if (e < 1) throw std::invalid_argument("ramification indices must be positive");
      sum += e;
    }
    if (!have_n) cfg.degrees = {sum};
    if (cfg.degrees != std::vector<std::int64_t>{sum}) {
      throw std::invalid_argument("n must equal the sum of the ramification indices");
    }
  }
  if (cfg.degrees.empty()) throw std::invalid_argument("scenario needs n");
  for (std::int64_t n : cfg.degrees) {
    if (n < 3) throw std::invalid_argument("n must be >= 3");
  }
  if (cfg.points < 2) throw std::invalid_argument("points must be >= 2");
  if (cfg.max_subset < 2) throw std::invalid_argument("max_subset must be >= 2");
  if (cfg.nu < 2) throw std::invalid_argument("nu must be >= 2");
  if (cfg.trials && *cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.d) {
    for (const auto& p : cfg.places) {
      if (!DAverageParams::is_valid(*cfg.d, p.triple.triple())) {
        throw std::invalid_argument("d violates the congruence at place " + p.id);
      }
    }
  }
  return cfg;
}

ScenarioConfig parse_scenario_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_scenario(in);
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::int64_t n, std::int64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

ScenarioRow run_trial(const ScenarioConfig& cfg, std::int64_t n, std::int64_t trial) {
  std::mt19937_64 rng = trial_engine(cfg.seed, n, trial);
  const std::int64_t d = cfg.torsion_level();
  const auto v0 = static_cast<std::size_t>(
      std::find_if(cfg.places.begin(), cfg.places.end(), [&](const PlaceModel& p) { return p.id == cfg.v0; }) -
      cfg.places.begin());
  const PlaceModel& base = cfg.places[v0];
  const DAverageParams d0(d, base.triple.triple());

  ExtensionProfile profile = draw_profile(cfg, n, rng);
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::vector<IntegerLift>> lifts(cfg.places.size());
    for (std::size_t v = 0; v < cfg.places.size(); ++v) {
      std::uniform_int_distribution<std::int64_t> coord(0, cfg.places[v].triple.discriminant() - 1);
      for (std::int64_t k = 0; k < cfg.points; ++k) {
        const std::int64_t u = coord(rng);
        lifts[v].push_back({u, coord(rng)});
      }
    }
    const GlobalPointSet all(std::move(lifts));
    const auto cell = pigeonhole_subset(base.triple, torus_points(base, all.lifts(v0)), d0);

    // Random conflicts among the cell members, at most nu per anchor.
    const std::size_t M = cell.indices.size();
    std::vector<std::set<std::size_t>> conflicts(M);
    for (std::size_t i = 0; i + 1 < M; ++i) {
      const std::int64_t count = std::uniform_int_distribution<std::int64_t>(0, cfg.nu)(rng);
      for (std::int64_t k = 0; k < count; ++k) {
        conflicts[i].insert(std::uniform_int_distribution<std::size_t>(i + 1, M - 1)(rng));
      }
    }
    auto kept = greedy_torsion_avoid(
        M, [&](std::size_t i, std::size_t j) { return conflicts[i].contains(j); }, cfg.nu);
    if (kept.size() > cfg.max_subset) kept.resize(cfg.max_subset);
    if (kept.size() < 2) continue;

    std::vector<std::size_t> chosen;
    for (std::size_t k : kept) chosen.push_back(cell.indices[k]);
    const GlobalPointSet sigma = all.subset(chosen);
    const GlobalAverage avg = global_double_average(cfg.places, profile, sigma, d);

    ScenarioRow row;
    row.scenario = cfg.id;
    row.trial = trial;
    row.n = n;
    row.N = static_cast<std::int64_t>(sigma.size());
    row.lhs = avg.total;
    row.estimates = theorem_estimates(cfg.places, profile, sigma, d, cfg.v0, avg);
    row.profile = profile;
    return row;
  }
  throw std::runtime_error("could not draw a point set with two or more points; raise 'points'");
}

std::vector<ScenarioRow> run_scenario(const ScenarioConfig& cfg, std::int64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<ScenarioRow> rows;
  for (std::int64_t n : cfg.degrees) {
    for (std::int64_t t = 0; t < trials; ++t) rows.push_back(run_trial(cfg, n, t));
  }
  return rows;
}

}  // namespace bernheight
