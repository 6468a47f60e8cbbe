#include <gtest/gtest.h>

#include "bernheight/periodic_form.hpp"
#include "support.hpp"

using namespace bernheight;

namespace {

NormalizedTriple nt(std::int64_t a, std::int64_t b, std::int64_t c) {
  return NormalizedTriple::from_normalized(QuadTriple(a, b, c));
}

Rational R(std::int64_t p, std::int64_t q = 1) { return make_rational(p, q); }

// Number of the four translate equalities F(p) = F(p +- e_i) satisfied at p.
int edge_equalities(const QuadTriple& t, const RationalPoint& p) {
  const Rational f = eval_F(t, p.x, p.y);
  int count = 0;
  for (auto [i, j] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
    if (eval_F(t, p.x + i, p.y + j) == f) ++count;
  }
  return count;
}

}  // namespace

TEST(TorusPoint, CentersRepresentative) {
  TorusPoint p(R(3, 2), R(-7, 4));
  EXPECT_EQ(p.x(), R(-1, 2));
  EXPECT_EQ(p.y(), R(1, 4));
  EXPECT_EQ(TorusPoint(R(1), R(2)), TorusPoint(R(0), R(0)));
  EXPECT_EQ(p - p, TorusPoint());
  EXPECT_EQ(-TorusPoint(R(1, 3), R(0)), TorusPoint(R(2, 3), R(0)));
}

TEST(EvalF, Examples) {
  EXPECT_EQ(eval_F(QuadTriple(1, 0, 1), R(1, 2), R(1, 2)), R(1, 2));
  EXPECT_EQ(eval_F(QuadTriple(2, 1, 5), R(1, 2), R(0)), R(1, 2));
  EXPECT_EQ(eval_F(QuadTriple(2, 1, 2), R(1), R(-1)), R(2));
}

TEST(EvalF, SecondFormIdentity) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 200; ++k) {
    const QuadTriple t = testsupport::random_definite(rng, 30);
    const Rational x = testsupport::random_rational(rng, 12), y = testsupport::random_rational(rng, 12);
    const Rational alt = make_rational(t.alpha()) * x * x + make_rational(t.b()) * (x + y) * (x + y) +
                         make_rational(t.gamma()) * y * y;
    ASSERT_EQ(eval_F(t, x, y), alt);
  }
}

TEST(EvalL, Examples) {
  auto r1 = eval_L(nt(1, 0, 1), TorusPoint(R(0), R(0)));
  EXPECT_EQ(r1.value, R(0));
  EXPECT_EQ(r1.region, Region::Octagon);
  auto r2 = eval_L(nt(1, 0, 1), TorusPoint(R(1, 2), R(1, 2)));
  EXPECT_EQ(r2.value, R(1, 2));
  EXPECT_GE(r2.minimizers.size(), 2u);
  EXPECT_EQ(r2.region, Region::Boundary);
  auto r3 = eval_L(nt(2, 1, 5), TorusPoint(R(1, 2), R(0)));
  EXPECT_EQ(r3.value, R(1, 2));
  EXPECT_EQ(r3.region, Region::Boundary);
  EXPECT_EQ(r3.minimizers.size(), 2u);
}

TEST(EvalL, RegionsMatchTriangleOffsets) {
  const auto t = nt(2, 1, 2);
  // Near the corner (1/2, 1/2): triangles I and II.
  EXPECT_EQ(eval_L(t, TorusPoint(R(1, 5), R(12, 25))).region, Region::I);
  EXPECT_EQ(eval_L(t, TorusPoint(R(12, 25), R(1, 5))).region, Region::II);
  EXPECT_EQ(eval_L(t, TorusPoint(R(-1, 5), R(-12, 25))).region, Region::III);
  EXPECT_EQ(eval_L(t, TorusPoint(R(-12, 25), R(-1, 5))).region, Region::IV);
  EXPECT_EQ(eval_L(t, TorusPoint(R(1, 10), R(-1, 10))).region, Region::Octagon);
}

TEST(EvalL, NineOffsetsMatchWideWindow) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 200; ++k) {
    const auto t = testsupport::random_normalized(rng, 30);
    for (int j = 0; j < 200; ++j) {
      const TorusPoint p = testsupport::random_point(rng, 40);
      const MinimizerResult r = eval_L(t, p);
      ASSERT_EQ(r.value, testsupport::L_wide(t.triple(), p));
      for (auto [i, jj] : r.minimizers) {
        ASSERT_EQ(eval_F(t.triple(), p.x() + i, p.y() + jj), r.value);
      }
      // 0 <= L <= F at the centered representative, equal exactly on octagon/boundary.
      const Rational f = eval_F(t.triple(), p.x(), p.y());
      ASSERT_GE(r.value, 0);
      ASSERT_LE(r.value, f);
      const bool zero_offset =
          std::find(r.minimizers.begin(), r.minimizers.end(), std::pair{0, 0}) != r.minimizers.end();
      ASSERT_EQ(r.value == f, zero_offset);
      if (r.region == Region::Octagon) {
        ASSERT_EQ(r.value, f);
      }
    }
  }
}

TEST(EvalL, Symmetries) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 300; ++k) {
    const auto t = testsupport::random_normalized(rng, 30);
    const TorusPoint p = testsupport::random_point(rng, 30);
    ASSERT_EQ(eval_L_value(t, p), eval_L_value(t, -p));
    // L_{a,b,c}(x,y) = L_{c,b,a}(y,x); (c,b,a) need not be normalized, so use the wide window.
    const QuadTriple swapped(t.c(), t.b(), t.a());
    ASSERT_EQ(eval_L_value(t, p), testsupport::L_wide(swapped, TorusPoint(p.y(), p.x())));
  }
}

TEST(Hexagon, SquareCaseIsDegenerate) {
  const auto g = hexagon_vertices(nt(1, 0, 1));
  EXPECT_TRUE(g.degenerate);
  ASSERT_EQ(g.vertices.size(), 4u);
  for (const auto& v : g.vertices) {
    EXPECT_EQ(abs(v.x), R(1, 2));
    EXPECT_EQ(abs(v.y), R(1, 2));
  }
}

TEST(Hexagon, CaptionVertices) {
  const auto g = hexagon_vertices(nt(2, 1, 2));
  EXPECT_FALSE(g.degenerate);
  ASSERT_EQ(g.vertices.size(), 6u);
  EXPECT_EQ(g.vertices[0], (RationalPoint{R(1, 3), R(1, 3)}));
  EXPECT_EQ(g.vertices[1], (RationalPoint{R(-1, 3), R(-1, 3)}));
}

TEST(Hexagon, VertexEqualities) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 100; ++k) {
    auto t = testsupport::random_normalized(rng, 30);
    if (t.b() == 0) continue;
    const auto g = hexagon_vertices(t);
    ASSERT_EQ(g.vertices.size(), 6u);
    // Q12 and Q34 lie on two edges, the square-boundary points on one.
    EXPECT_GE(edge_equalities(t.triple(), g.vertices[0]), 2);
    EXPECT_GE(edge_equalities(t.triple(), g.vertices[1]), 2);
    for (std::size_t i = 2; i < 6; ++i) EXPECT_GE(edge_equalities(t.triple(), g.vertices[i]), 1);
    // Every true cell vertex sits on two cell edges and at value L = F.
    ASSERT_EQ(g.cell.size(), 6u);
    Rational area2 = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      const auto& p = g.cell[i];
      const auto& q = g.cell[(i + 1) % 6];
      area2 += p.x * q.y - q.x * p.y;
      int on_edges = 0;
      const Rational f = eval_F(t.triple(), p.x, p.y);
      for (auto [di, dj] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1},
                            std::pair{1, -1}, std::pair{-1, 1}}) {
        if (eval_F(t.triple(), p.x + di, p.y + dj) == f) ++on_edges;
      }
      EXPECT_GE(on_edges, 2);
      EXPECT_EQ(testsupport::L_wide(t.triple(), TorusPoint(p.x, p.y)), f);
    }
    // The cell is a fundamental domain: area 1, counter-clockwise.
    EXPECT_EQ(area2, R(2));
    ASSERT_EQ(g.octagon.size(), 8u);
    ASSERT_EQ(g.triangles.size(), 4u);
  }
}

TEST(Hexagon, TriangleCentroidsHaveMatchingRegions) {
  std::mt19937_64 rng(25);
  const Region expected[] = {Region::I, Region::II, Region::III, Region::IV};
  for (int k = 0; k < 100; ++k) {
    auto t = testsupport::random_normalized(rng, 30);
    if (t.b() == 0) continue;
    const auto g = hexagon_vertices(t);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& tri = g.triangles[i];
      const TorusPoint centroid((tri[0].x + tri[1].x + tri[2].x) / 3, (tri[0].y + tri[1].y + tri[2].y) / 3);
      EXPECT_EQ(eval_L(t, centroid).region, expected[i]) << t.triple();
    }
    Rational cx = 0, cy = 0;
    for (const auto& v : g.octagon) {
      cx += v.x;
      cy += v.y;
    }
    EXPECT_EQ(eval_L(t, TorusPoint(cx / 8, cy / 8)).region, Region::Octagon);
  }
}

TEST(AvgDirect, Examples) {
  EXPECT_EQ(avg_d_direct(nt(1, 0, 1), TorusPoint(), 1), R(0));
  EXPECT_EQ(avg_d_direct(nt(1, 0, 1), TorusPoint(), 2), R(1, 4));
  EXPECT_EQ(avg_d_direct(nt(2, 0, 2), TorusPoint(), 2), R(1, 2));
  EXPECT_THROW(avg_d_direct(nt(1, 0, 1), TorusPoint(), 0), std::invalid_argument);
}

TEST(AvgDirect, MatchesEnumerationOracle) {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 60; ++k) {
    const auto t = testsupport::random_normalized(rng, 20);
    const TorusPoint p = testsupport::random_point(rng, 15);
    const std::int64_t d = testsupport::uniform(rng, 1, 8);
    ASSERT_EQ(avg_d_direct(t, p, d), testsupport::avg_d_oracle(t.triple(), p, d));
    ASSERT_EQ(avg_d_direct(t, p, 1), eval_L_value(t, p));
  }
}

TEST(AvgDirect, LargeDenominatorsUseExactFallback) {
  const auto t = nt(2, 1, 5);
  const TorusPoint p(make_rational(1, 1 << 25), make_rational(3, 7));
  EXPECT_EQ(avg_d_direct(t, p, 3), testsupport::avg_d_oracle(t.triple(), p, 3));
}
