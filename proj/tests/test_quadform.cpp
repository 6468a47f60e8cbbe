#include <gtest/gtest.h>

#include "bernheight/quadform.hpp"
#include "support.hpp"

using namespace bernheight;
using testsupport::uniform;

TEST(QuadTriple, RejectsIndefiniteAndDegenerate) {
  EXPECT_THROW(QuadTriple(1, 1, 1), std::invalid_argument);
  EXPECT_THROW(QuadTriple(1, 2, 1), std::invalid_argument);
  EXPECT_THROW(QuadTriple(0, 0, 1), std::invalid_argument);
  EXPECT_THROW(QuadTriple(-1, 0, -1), std::invalid_argument);
  EXPECT_NO_THROW(QuadTriple(1, 0, 1));
}

TEST(QuadTriple, Invariants) {
  auto i1 = invariants(QuadTriple(1, 0, 1));
  EXPECT_EQ(i1.D, 1);
  EXPECT_EQ(i1.alpha, 1);
  EXPECT_EQ(i1.gamma, 1);
  auto i2 = invariants(QuadTriple(2, 1, 5));
  EXPECT_EQ(i2.D, 9);
  EXPECT_EQ(i2.alpha, 1);
  EXPECT_EQ(i2.gamma, 4);
  auto i3 = invariants(QuadTriple(5, 4, 5));
  EXPECT_EQ(i3.D, 9);
  EXPECT_EQ(i3.alpha, 1);
  EXPECT_EQ(i3.gamma, 1);
}

TEST(LinearForms, Examples) {
  auto f = linear_forms(QuadTriple(2, 1, 5), 1, 0);
  EXPECT_EQ(f.F0, 5);
  EXPECT_EQ(f.F1, 5);
  EXPECT_EQ(f.F2, -1);
  EXPECT_EQ(f.F3, 4);
  EXPECT_EQ(f.F0 - 1 * f.F1, 0);
  auto g = linear_forms(QuadTriple(1, 0, 1), 1, 1);
  EXPECT_EQ(g.F0, 2);
  EXPECT_EQ(g.F1, 1);
  EXPECT_EQ(g.F2, 1);
  EXPECT_EQ(g.F3, 2);
}

TEST(LinearForms, IdentitiesHoldOnFullIndexRange) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const QuadTriple t = testsupport::random_definite(rng, 50);
    const auto [D, alpha, gamma] = invariants(t);
    for (std::int64_t m = -100; m <= 100; ++m) {
      for (std::int64_t n = -100; n <= 100; ++n) {
        const auto f = linear_forms(t, m, n);
        ASSERT_EQ(f.F3, f.F1 + f.F2);
        ASSERT_EQ(f.F0 - alpha * f.F1, D * n);
        ASSERT_EQ(f.F0 - gamma * f.F2, D * m);
        ASSERT_EQ(f.F0 + t.b() * f.F3, D * (m + n));
      }
    }
  }
}

TEST(Normalize, Examples) {
  auto n1 = normalize(QuadTriple(1, 0, 1));
  EXPECT_EQ(n1.triple(), QuadTriple(1, 0, 1));
  EXPECT_EQ(n1.transform(), IntMatrix2::identity());
  EXPECT_EQ(normalize(QuadTriple(2, -1, 2)).triple(), QuadTriple(2, 1, 2));
  auto n3 = normalize(QuadTriple(5, 4, 5));
  EXPECT_EQ(n3.triple(), QuadTriple(2, 1, 5));
  EXPECT_EQ(n3.discriminant(), 9);
}

TEST(Normalize, RejectsNonNormalizedConstruction) {
  EXPECT_THROW(NormalizedTriple::from_normalized(QuadTriple(5, 4, 5)), std::invalid_argument);
  EXPECT_THROW(NormalizedTriple::from_normalized(QuadTriple(2, -1, 2)), std::invalid_argument);
  EXPECT_THROW(NormalizedTriple::from_normalized(QuadTriple(3, 0, 2)), std::invalid_argument);
}

TEST(Normalize, AgreesWithBruteForceAndTransform) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const QuadTriple t = testsupport::random_definite(rng, 50);
    const NormalizedTriple n = normalize(t);
    ASSERT_TRUE(NormalizedTriple::is_normalized(n.triple()));
    ASSERT_EQ(n.discriminant(), t.discriminant());
    ASSERT_EQ(std::abs(n.transform().det()), 1);
    ASSERT_EQ(transform_form(t, n.transform()), n.triple());
    const auto [a, b, c] = testsupport::brute_force_reduce(t);
    ASSERT_EQ(n.a(), a) << t;
    ASSERT_EQ(n.b(), b) << t;
    ASSERT_EQ(n.c(), c) << t;
    // Idempotent.
    const NormalizedTriple again = normalize(n.triple());
    ASSERT_EQ(again.triple(), n.triple());
    ASSERT_EQ(again.transform(), IntMatrix2::identity());
  }
}

TEST(Normalize, TransformMustBeUnimodular) {
  IntMatrix2 m;
  m.e = {2, 0, 0, 1};
  EXPECT_THROW(transform_form(QuadTriple(1, 0, 1), m), std::invalid_argument);
}

TEST(Xi, Examples) {
  EXPECT_EQ(xi(QuadTriple(1, 0, 1)), Rational(2));
  EXPECT_EQ(xi(QuadTriple(2, 1, 2)), Rational(1));
  EXPECT_EQ(xi(QuadTriple(2, 0, 2)), Rational(4));
  EXPECT_EQ(xi(QuadTriple(2, 0, 2)), 2 * xi(QuadTriple(1, 0, 1)));
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(QuadTriple(1, 0, 1)), 1);
  EXPECT_EQ(delta(QuadTriple(2, 1, 5)), 9);
  EXPECT_EQ(delta(QuadTriple(2, 0, 2)), 1);
}

TEST(XiDelta, Homogeneity) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const NormalizedTriple t = testsupport::random_normalized(rng, 50);
    for (std::int64_t e : {2, 3, 5}) {
      const QuadTriple s = t.scaled(e).triple();
      ASSERT_EQ(xi(s), make_rational(e) * xi(t.triple()));
      ASSERT_EQ(delta(s), delta(t.triple()));
      ASSERT_EQ(s.discriminant(), e * e * t.discriminant());
    }
  }
}

TEST(Delta, DividesDiscriminant) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const NormalizedTriple t = testsupport::random_normalized(rng, 60);
    const std::int64_t g = std::gcd(std::gcd(t.a(), t.b()), t.c());
    ASSERT_EQ(delta(t.triple()) * g * g, t.discriminant());
  }
}
