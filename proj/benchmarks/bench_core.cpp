#include <benchmark/benchmark.h>

#include <random>

#include "bernheight/fourier.hpp"
#include "bernheight/global_model.hpp"
#include "bernheight/local_height.hpp"
#include "bernheight/scenario.hpp"
#include "bernheight/theta.hpp"

using namespace bernheight;

namespace {

NormalizedTriple triple() { return NormalizedTriple::from_normalized(QuadTriple(2, 1, 5)); }

std::vector<TorusPoint> points(std::size_t N) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> coord(0, 8);
  std::vector<TorusPoint> out;
  for (std::size_t k = 0; k < N; ++k) {
    const std::int64_t u = coord(rng);
    out.push_back(lift_to_torus(triple().triple(), {u, coord(rng)}));
  }
  return out;
}

void BM_EvalL(benchmark::State& state) {
  const auto t = triple();
  const TorusPoint p(make_rational(3, 17), make_rational(-5, 11));
  for (auto _ : state) benchmark::DoNotOptimize(eval_L_value(t, p));
}
BENCHMARK(BM_EvalL);

void BM_QuadratureGrid(benchmark::State& state) {
  const auto t = triple();
  for (auto _ : state) {
    QuadratureGrid g(t, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(g.coefficients(6));
  }
}
BENCHMARK(BM_QuadratureGrid)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_PartialSum(benchmark::State& state) {
  const auto t = triple();
  const FourierTable table(t, state.range(0));
  const TorusPoint p(make_rational(1, 7), make_rational(2, 9));
  for (auto _ : state) benchmark::DoNotOptimize(table.evaluate(p));
}
BENCHMARK(BM_PartialSum)->Arg(50)->Arg(200);

void BM_AvgDClosedForm(benchmark::State& state) {
  const auto t = triple();
  const DAverageParams d(18, t.triple());
  const TorusPoint p(make_rational(3, 17), make_rational(-5, 11));
  for (auto _ : state) benchmark::DoNotOptimize(avg_d_closed_form(t, p, d));
}
BENCHMARK(BM_AvgDClosedForm);

void BM_AvgDDirect(benchmark::State& state) {
  const auto t = triple();
  const TorusPoint p(make_rational(3, 17), make_rational(-5, 11));
  for (auto _ : state) benchmark::DoNotOptimize(avg_d_direct(t, p, state.range(0)));
}
BENCHMARK(BM_AvgDDirect)->Arg(6)->Arg(18);

void BM_PairAverage(benchmark::State& state) {
  const auto t = triple();
  const DAverageParams d(18, t.triple());
  const auto pts = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pair_average(t, pts, d));
}
BENCHMARK(BM_PairAverage)->Arg(10)->Arg(40);

void BM_TropicalTheta(benchmark::State& state) {
  const auto Q = ValuationMatrix::from_triple(make_rational(2), make_rational(1), make_rational(5));
  const ValuationVector w{make_rational(37, 3), make_rational(-11, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(tropical_theta(Q, w));
}
BENCHMARK(BM_TropicalTheta);

void BM_ScenarioTrial(benchmark::State& state) {
  const auto cfg = parse_scenario_text(
      "place = v1 2 1 5\nplace = v2 1 0 1\nplace = v3 2 1 2\nprofile = random-partition\nn = 12\npoints = 800\n");
  std::int64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_trial(cfg, 12, trial++));
}
BENCHMARK(BM_ScenarioTrial)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
