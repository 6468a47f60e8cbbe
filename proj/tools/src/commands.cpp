#include "commands.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "bernheight/bernoulli.hpp"
#include "bernheight/fourier.hpp"
#include "bernheight/global_model.hpp"
#include "bernheight/local_height.hpp"
#include "bernheight/periodic_form.hpp"
#include "bernheight/quadform.hpp"
#include "bernheight/theta.hpp"

namespace bernheight::cli {

namespace {

QuadTriple make_triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  try {
    return QuadTriple(a, b, c);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

NormalizedTriple require_normalized(std::int64_t a, std::int64_t b, std::int64_t c) {
  const QuadTriple t = make_triple(a, b, c);
  if (!NormalizedTriple::is_normalized(t)) {
    throw UsageError("triple must satisfy 0 <= 2b <= a <= c; run 'reduce' first");
  }
  return NormalizedTriple::from_normalized(t);
}

Rational parse_arg(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string format_offsets(const std::vector<std::pair<int, int>>& offs) {
  std::string out;
  for (const auto& [m, n] : offs) {
    if (!out.empty()) out += ';';
    out += "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  }
  return out;
}

std::string format_vector(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::int64_t x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

}  // namespace

CommandResult cmd_reduce(std::int64_t a, std::int64_t b, std::int64_t c) {
  const QuadTriple t = make_triple(a, b, c);
  const NormalizedTriple nt = normalize(t);
  CommandResult r;
  r.table.columns = {"a", "b", "c", "D", "m11", "m12", "m21", "m22"};
  const auto& M = nt.transform().e;
  r.table.add_row({nt.a(), nt.b(), nt.c(), nt.discriminant(), M[0], M[1], M[2], M[3]});
  r.ok = transform_form(t, nt.transform()) == nt.triple() && NormalizedTriple::is_normalized(nt.triple());
  return r;
}

CommandResult cmd_eval_l(std::int64_t a, std::int64_t b, std::int64_t c, const std::string& x,
                         const std::string& y) {
  const NormalizedTriple nt = require_normalized(a, b, c);
  const TorusPoint p(parse_arg(x), parse_arg(y));
  const MinimizerResult res = eval_L(nt, p);
  CommandResult r;
  r.table.columns = {"x", "y", "value", "region", "minimizers"};
  r.table.add_row({to_string(p.x()), to_string(p.y()), to_string(res.value), std::string(to_string(res.region)),
                   format_offsets(res.minimizers)});
  return r;
}

CommandResult cmd_fourier(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t M, const Options& opt) {
  const NormalizedTriple nt = require_normalized(a, b, c);
  if (M < 0) throw UsageError("M must be non-negative");
  if (opt.oracle && (opt.grid_exponent < 6 || opt.grid_exponent > 12)) {
    throw UsageError("--grid-exponent must lie in [6, 12]");
  }
  CommandResult r;
  r.table.columns = {"m", "n", "case", "value", "prefactor", "pi_power"};
  std::vector<double> oracle;
  if (opt.oracle) {
    r.table.columns.insert(r.table.columns.end(), {"oracle", "abs_error"});
    oracle = QuadratureGrid(nt, opt.grid_exponent).coefficients(M);
  }
  const std::size_t width = static_cast<std::size_t>(2 * M + 1);
  for (std::int64_t m = -M; m <= M; ++m) {
    for (std::int64_t n = -M; n <= M; ++n) {
      const FourierCoefficient fc = coefficient(nt, m, n);
      std::vector<Cell> row{m, n, std::string(to_string(fc.case_tag)), fc.value, to_string(fc.prefactor),
                            std::int64_t{fc.pi_power}};
      if (opt.oracle) {
        const double q = oracle[static_cast<std::size_t>(m + M) * width + static_cast<std::size_t>(n + M)];
        const double err = std::abs(q - fc.value);
        row.emplace_back(q);
        row.emplace_back(err);
        r.ok = r.ok && err <= 1e-4;
      }
      r.table.add_row(std::move(row));
    }
  }
  return r;
}

CommandResult cmd_hexagon(std::int64_t a, std::int64_t b, std::int64_t c) {
  const NormalizedTriple nt = require_normalized(a, b, c);
  const HexagonGeometry g = hexagon_vertices(nt);
  CommandResult r;
  r.table.columns = {"shape", "index", "x", "y"};
  auto emit = [&](const std::string& shape, const std::vector<RationalPoint>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      r.table.add_row({shape, static_cast<std::int64_t>(i), to_string(pts[i].x), to_string(pts[i].y)});
    }
  };
  emit(g.degenerate ? "square-corner" : "vertex", g.vertices);
  emit("cell", g.cell);
  emit("octagon", g.octagon);
  static const char* kNames[] = {"triangle-I", "triangle-II", "triangle-III", "triangle-IV"};
  for (std::size_t k = 0; k < g.triangles.size(); ++k) emit(kNames[k], g.triangles[k]);
  return r;
}

CommandResult cmd_avg_d(std::int64_t a, std::int64_t b, std::int64_t c, const std::string& x,
                        const std::string& y, std::int64_t d) {
  const NormalizedTriple nt = require_normalized(a, b, c);
  const TorusPoint p(parse_arg(x), parse_arg(y));
  if (!DAverageParams::is_valid(d, nt.triple())) {
    throw UsageError("d must be a positive multiple of 2*Delta = " + std::to_string(2 * delta(nt.triple())));
  }
  const AvgDClosedForm cf = avg_d_closed_form(nt, p, DAverageParams(d, nt.triple()));
  const Rational direct = avg_d_direct(nt, p, d);
  CommandResult r;
  r.table.columns = {"x", "y", "d", "mean_term", "bernoulli_part", "closed_form", "direct", "equal"};
  const bool equal = cf.total == direct;
  r.table.add_row({to_string(p.x()), to_string(p.y()), d, to_string(cf.mean_term), to_string(cf.bernoulli_part),
                   to_string(cf.total), to_string(direct), equal});
  r.ok = equal;
  return r;
}

CommandResult cmd_local_bounds(const LocalBoundsConfig& cfg, const Options& opt) {
  const NormalizedTriple nt = require_normalized(cfg.a, cfg.b, cfg.c);
  const QuadTriple& t = nt.triple();
  const std::int64_t d = cfg.d == 0 ? 2 * delta(t) : cfg.d;
  if (!DAverageParams::is_valid(d, t)) {
    throw UsageError("d must be a positive multiple of 2*Delta = " + std::to_string(2 * delta(t)));
  }
  if (cfg.points < 2) throw UsageError("--points must be >= 2");
  if (cfg.pigeonhole_points < 1) throw UsageError("--pigeonhole-points must be >= 1");
  if (opt.trials < 1) throw UsageError("--trials must be >= 1");
  const DAverageParams dp(d, t);
  const std::int64_t D = t.discriminant();

  CommandResult r;
  r.table.meta = {{"seed", std::to_string(opt.seed)}};
  r.table.columns = {"trial", "check", "N", "value", "bound", "holds"};
  for (std::int64_t trial = 0; trial < opt.trials; ++trial) {
    std::mt19937_64 rng = trial_engine(opt.seed, 0, trial);
    std::uniform_int_distribution<std::int64_t> coord(0, D - 1);
    auto draw = [&] {
      const std::int64_t u = coord(rng);
      return IntegerLift{u, coord(rng)};
    };

    // Distinct torus points when the group Z^2 / Q Z^2 (of order D) is large enough.
    std::vector<TorusPoint> pts;
    if (D >= cfg.points) {
      std::vector<IntegerLift> lifts;
      std::set<std::pair<Rational, Rational>> seen;
      while (static_cast<std::int64_t>(lifts.size()) < cfg.points) {
        const IntegerLift l = draw();
        const TorusPoint p = lift_to_torus(t, l);
        if (seen.emplace(p.x(), p.y()).second) lifts.push_back(l);
      }
      pts = LocalPointSet(nt, lifts).points();
    } else {
      for (std::int64_t k = 0; k < cfg.points; ++k) pts.push_back(lift_to_torus(t, draw()));
    }
    const FourierAvgBound fb = fourier_avg_lower_bound(nt, pts, dp);
    r.table.add_row({trial, std::string("fourier-avg"), static_cast<std::int64_t>(pts.size()), to_string(fb.lhs),
                     to_string(fb.rhs), fb.holds});
    r.ok = r.ok && fb.holds;

    std::vector<TorusPoint> many;
    for (std::int64_t k = 0; k < cfg.pigeonhole_points; ++k) many.push_back(lift_to_torus(t, draw()));
    const PigeonholeResult ph = pigeonhole_subset(nt, many, dp);
    r.table.add_row({trial, std::string("pigeonhole"), static_cast<std::int64_t>(ph.indices.size()),
                     ph.min_pair_average ? to_string(*ph.min_pair_average) : std::string(""),
                     to_string(ph.bound), ph.holds});
    r.ok = r.ok && ph.holds;
  }
  return r;
}

CommandResult cmd_theta(const std::string& q, const std::string& w, const std::string& n) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : split(q, ';')) {
    std::vector<Rational> entries;
    for (const auto& e : split(row, ',')) entries.push_back(parse_arg(e));
    rows.push_back(std::move(entries));
  }
  ValuationVector wv;
  for (const auto& e : split(w, ',')) wv.push_back(parse_arg(e));
  IntVector nv;
  for (const auto& e : split(n, ',')) {
    const Rational v = parse_arg(e);
    if (v.get_den() != 1) throw UsageError("n must have integer entries");
    nv.push_back(to_int64(v.get_num()));
  }
  std::optional<ValuationMatrix> Q;
  try {
    Q.emplace(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (wv.size() != Q->dim() || nv.size() != Q->dim()) {
    throw UsageError("w and n need one entry per row of Q");
  }
  const TropicalTheta th = tropical_theta(*Q, wv);
  const ThetaTransformCheck tc = check_theta_transform(*Q, wv, nv);
  const LambdaInvarianceCheck lc = check_lambda_invariance(*Q, wv, nv);
  CommandResult r;
  r.table.columns = {"check", "lhs", "rhs", "holds", "argmin", "ties"};
  r.table.add_row({std::string("theta"), to_string(th.value), std::string(""), true, format_vector(th.argmin),
                   static_cast<std::int64_t>(th.ties)});
  r.table.add_row({std::string("transform"), to_string(tc.lhs), to_string(tc.rhs), tc.equal, std::string(""),
                   std::int64_t{0}});
  r.table.add_row({std::string("lambda-invariance"), to_string(lc.delta), std::string("0/1"), lc.zero,
                   std::string(""), std::int64_t{0}});
  r.ok = tc.equal && lc.zero;
  return r;
}

CommandResult cmd_simulate(const ScenarioConfig& cfg_in, const Options& opt) {
  ScenarioConfig cfg = cfg_in;
  if (opt.seed_given) cfg.seed = opt.seed;
  std::int64_t trials = cfg.trials.value_or(opt.trials);
  if (opt.trials_given) trials = opt.trials;
  if (trials < 1) throw UsageError("--trials must be >= 1");
  CommandResult r;
  r.table.meta = {{"seed", std::to_string(cfg.seed)}, {"d", std::to_string(cfg.torsion_level())}};
  r.table.columns = {"scenario", "trial", "n", "N", "lhs", "est1", "est2", "est3", "combined", "holds"};
  for (const ScenarioRow& row : run_scenario(cfg, trials)) {
    const TheoremEstimates& e = row.estimates;
    r.table.add_row({row.scenario, row.trial, row.n, row.N, to_string(row.lhs), to_string(e.est1),
                     to_string(e.est2), to_string(e.est3), e.combined, row.holds()});
    r.ok = r.ok && row.holds();
  }
  return r;
}

CommandResult cmd_holder(double alpha, double beta, const std::vector<double>& e) {
  HolderCheck h{};
  try {
    h = holder_bound(alpha, beta, e);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  CommandResult r;
  r.table.columns = {"lhs", "rhs", "holds"};
  r.table.add_row({h.lhs, h.rhs, h.holds});
  r.ok = h.holds;
  return r;
}

}  // namespace bernheight::cli
