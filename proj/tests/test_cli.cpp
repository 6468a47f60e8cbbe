#include <gtest/gtest.h>

#include "commands.hpp"
#include "table.hpp"

using namespace bernheight;
using namespace bernheight::cli;

TEST(Table, CsvLayout) {
  Table t;
  t.meta = {{"seed", "3"}};
  t.columns = {"name", "k", "x", "ok"};
  t.add_row({std::string("a,b"), std::int64_t{-4}, 0.1, true});
  EXPECT_EQ(to_csv(t), "# seed=3\nname,k,x,ok\n\"a,b\",-4,0.1,true\n");
  EXPECT_THROW(t.add_row({std::int64_t{1}}), std::logic_error);
}

TEST(Table, JsonlRoundTrip) {
  Table t;
  t.meta = {{"seed", "5"}, {"d", "18"}};
  t.columns = {"s", "i", "x", "b"};
  t.add_row({std::string("1/3"), std::int64_t{7}, -2.5e-17, false});
  t.add_row({std::string("x\"y"), std::int64_t{0}, 1.0 / 3.0, true});
  const std::string text = to_jsonl(t);
  EXPECT_EQ(text.substr(0, 9), "{\"meta\":{");
  EXPECT_EQ(parse_jsonl(text), t);
  EXPECT_THROW(parse_jsonl("{not json"), std::invalid_argument);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.0), "-2");
  const double v = 1.0 / 7.0;
  EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(Commands, Reduce) {
  const auto r = cmd_reduce(5, -1, 2);
  ASSERT_EQ(r.table.rows.size(), 1u);
  EXPECT_EQ(std::get<std::int64_t>(r.table.rows[0][0]), 2);
  EXPECT_EQ(std::get<std::int64_t>(r.table.rows[0][1]), 1);
  EXPECT_EQ(std::get<std::int64_t>(r.table.rows[0][2]), 5);
  EXPECT_TRUE(r.ok);
}

TEST(Commands, RequireNormalizedTriple) {
  EXPECT_THROW(cmd_eval_l(5, -1, 2, "0", "0"), UsageError);
  EXPECT_THROW(cmd_hexagon(2, 3, 5), UsageError);
}

TEST(Commands, EvalAndAverage) {
  const auto e = cmd_eval_l(1, 0, 1, "1/2", "1/2");
  EXPECT_EQ(std::get<std::string>(e.table.rows[0][2]), "1/2");
  const auto a = cmd_avg_d(2, 1, 2, "1/5", "-2/7", 6);
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(a.table.rows[0][5], a.table.rows[0][6]);
  EXPECT_THROW(cmd_avg_d(2, 1, 2, "0", "0", 4), UsageError);
}

TEST(Commands, FourierWithOracle) {
  Options opt;
  opt.oracle = true;
  opt.grid_exponent = 8;
  const auto r = cmd_fourier(2, 1, 5, 1, opt);
  EXPECT_EQ(r.table.rows.size(), 9u);
  EXPECT_EQ(r.table.columns.back(), "abs_error");
  EXPECT_TRUE(r.ok);
}

TEST(Commands, LocalBoundsAndTheta) {
  Options opt;
  opt.seed = 4;
  opt.trials = 3;
  const auto r = cmd_local_bounds({2, 1, 5, 0, 6, 100}, opt);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.table.rows.size(), 6u);
  const auto th = cmd_theta("2,1;1,5", "1/2,-3", "1,2");
  EXPECT_TRUE(th.ok);
  EXPECT_THROW(cmd_theta("1,2;2,1", "0,0", "0,0"), UsageError);
}

TEST(Commands, SimulateIsReproducible) {
  const auto cfg = parse_scenario_text("place = v1 2 1 5\nplace = v2 1 0 1\nn = 3,4\npoints = 200\ntrials = 2\n");
  Options opt;
  const auto a = cmd_simulate(cfg, opt);
  const auto b = cmd_simulate(cfg, opt);
  EXPECT_EQ(to_csv(a.table), to_csv(b.table));
  EXPECT_EQ(a.table.rows.size(), 4u);
  EXPECT_EQ(parse_jsonl(to_jsonl(a.table)), a.table);
  opt.seed = 99;
  opt.seed_given = true;
  const auto c = cmd_simulate(cfg, opt);
  EXPECT_EQ(c.table.meta.front().second, "99");
}

TEST(Commands, Holder) {
  const auto h = cmd_holder(1, 4, {1, 1});
  EXPECT_TRUE(h.ok);
  EXPECT_EQ(std::get<double>(h.table.rows[0][0]), 5.0);
}
