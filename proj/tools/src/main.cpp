#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <unistd.h>

#include <CLI11.hpp>

#include "bernheight/scenario.hpp"
#include "commands.hpp"

namespace fs = std::filesystem;
using namespace bernheight;
using namespace bernheight::cli;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kCheckFailed = 2 };

void write_atomically(const fs::path& target, const std::string& data) {
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << data;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

struct TripleArgs {
  std::int64_t a = 0, b = 0, c = 0;
};

void add_triple(CLI::App* cmd, TripleArgs& t) {
  cmd->add_option("a", t.a, "coefficient of x^2")->required();
  cmd->add_option("b", t.b, "half the coefficient of xy")->required();
  cmd->add_option("c", t.c, "coefficient of y^2")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernoulli local heights on split multiplicative abelian surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string format = "csv";
  std::string out_path;
  app.add_option("--seed", opt.seed, "seed for randomized suites");
  app.add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--out", out_path, "write here instead of stdout");
  app.add_flag("--oracle", opt.oracle, "add a quadrature column to 'fourier'");
  app.add_option("--grid-exponent", opt.grid_exponent, "quadrature grid is 2^k per side")
      ->check(CLI::Range(6, 12));
  app.add_option("--trials", opt.trials, "trials for randomized suites")->check(CLI::PositiveNumber);

  TripleArgs tri;
  std::string x, y;
  std::int64_t M = 6, d = 0;

  auto* reduce = app.add_subcommand("reduce", "reduce a positive definite form to 0 <= 2b <= a <= c");
  add_triple(reduce, tri);

  auto* eval_l = app.add_subcommand("eval-l", "periodic form L at a torus point");
  add_triple(eval_l, tri);
  eval_l->add_option("x", x)->required();
  eval_l->add_option("y", y)->required();

  auto* fourier = app.add_subcommand("fourier", "Fourier coefficients for |m|,|n| <= M");
  add_triple(fourier, tri);
  fourier->add_option("M", M)->required();

  auto* hexagon = app.add_subcommand("hexagon", "vertices and region polygons");
  add_triple(hexagon, tri);

  auto* avg_d = app.add_subcommand("avg-d", "d-torsion average: closed form against enumeration");
  add_triple(avg_d, tri);
  avg_d->add_option("x", x)->required();
  avg_d->add_option("y", y)->required();
  avg_d->add_option("d", d)->required();

  LocalBoundsConfig lb;
  auto* local = app.add_subcommand("local-bounds", "randomized check of the two local lower bounds");
  local->add_option("a", lb.a)->required();
  local->add_option("b", lb.b)->required();
  local->add_option("c", lb.c)->required();
  local->add_option("--d", lb.d, "torsion level (default 2*Delta)");
  local->add_option("--points", lb.points, "points per Fourier-average trial");
  local->add_option("--pigeonhole-points", lb.pigeonhole_points, "points per pigeonhole trial");

  std::string q, w, n;
  auto* theta = app.add_subcommand("theta", "tropical theta transformation identities");
  theta->add_option("--q", q, "matrix rows separated by ';', e.g. \"2,1;1,5\"")->required();
  theta->add_option("--w", w, "valuation vector, e.g. \"1/2,0\"")->required();
  theta->add_option("--n", n, "integer shift, e.g. \"1,1\"")->required();

  std::string scenario_path;
  auto* simulate = app.add_subcommand("simulate", "run a global scenario file");
  simulate->add_option("scenario", scenario_path)->required()->check(CLI::ExistingFile);

  double alpha = 0, beta = 0;
  std::vector<double> es;
  auto* holder = app.add_subcommand("holder", "check alpha e0 + beta sum 1/e_i >= (alpha^2 beta n)^(1/3)");
  holder->add_option("alpha", alpha)->required();
  holder->add_option("beta", beta)->required();
  holder->add_option("e", es)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  opt.seed_given = app.count("--seed") > 0;
  opt.trials_given = app.count("--trials") > 0;

  CommandResult result;
  try {
    if (*reduce) {
      result = cmd_reduce(tri.a, tri.b, tri.c);
    } else if (*eval_l) {
      result = cmd_eval_l(tri.a, tri.b, tri.c, x, y);
    } else if (*fourier) {
      result = cmd_fourier(tri.a, tri.b, tri.c, M, opt);
    } else if (*hexagon) {
      result = cmd_hexagon(tri.a, tri.b, tri.c);
    } else if (*avg_d) {
      result = cmd_avg_d(tri.a, tri.b, tri.c, x, y, d);
    } else if (*local) {
      result = cmd_local_bounds(lb, opt);
    } else if (*theta) {
      result = cmd_theta(q, w, n);
    } else if (*simulate) {
      std::ifstream in(scenario_path);
      ScenarioConfig cfg;
      try {
        cfg = parse_scenario(in);
      } catch (const std::invalid_argument& e) {
        throw UsageError(scenario_path + ": " + e.what());
      }
      result = cmd_simulate(cfg, opt);
    } else if (*holder) {
      result = cmd_holder(alpha, beta, es);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string text = format == "jsonl" ? to_jsonl(result.table) : to_csv(result.table);
  try {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_atomically(out_path, text);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!result.ok) {
    std::cerr << "check failed; see the output rows marked false\n";
    return kCheckFailed;
  }
  return kOk;
}
