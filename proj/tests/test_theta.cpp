#include <gtest/gtest.h>

#include "bernheight/theta.hpp"
#include "support.hpp"

using namespace bernheight;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return make_rational(p, q); }

ValuationMatrix identity2() { return ValuationMatrix::from_triple(R(1), R(0), R(1)); }
ValuationMatrix q215() { return ValuationMatrix::from_triple(R(2), R(1), R(5)); }

ValuationVector random_w(std::mt19937_64& rng, std::size_t g, std::int64_t bound) {
  ValuationVector w;
  for (std::size_t i = 0; i < g; ++i) {
    const std::int64_t den = testsupport::uniform(rng, 1, 6);
    w.push_back(make_rational(testsupport::uniform(rng, -bound * den, bound * den), den));
  }
  return w;
}

IntVector random_n(std::mt19937_64& rng, std::size_t g, std::int64_t bound) {
  IntVector n;
  for (std::size_t i = 0; i < g; ++i) n.push_back(testsupport::uniform(rng, -bound, bound));
  return n;
}

}  // namespace

TEST(ValuationMatrix, Validation) {
  EXPECT_THROW(ValuationMatrix({{R(1), R(2)}, {R(2), R(1)}}), std::invalid_argument);
  EXPECT_THROW(ValuationMatrix({{R(1), R(0)}, {R(1), R(1)}}), std::invalid_argument);
  EXPECT_THROW(ValuationMatrix({{R(1), R(0)}}), std::invalid_argument);
  EXPECT_THROW(ValuationMatrix({}), std::invalid_argument);
  const ValuationMatrix q = q215();
  EXPECT_EQ(q.determinant(), R(9));
  EXPECT_EQ(q.inverse()[0][0], R(5, 9));
  EXPECT_EQ(q.inverse()[0][1], R(-1, 9));
}

TEST(TropicalTheta, Examples) {
  auto t1 = tropical_theta(identity2(), {R(0), R(0)});
  EXPECT_EQ(t1.value, R(0));
  EXPECT_EQ(t1.argmin, (IntVector{0, 0}));
  auto t2 = tropical_theta(identity2(), {R(2), R(0)});
  EXPECT_EQ(t2.value, R(-1));
  EXPECT_EQ(t2.argmin, (IntVector{-1, 0}));
  auto t3 = tropical_theta(q215(), {R(1), R(1)});
  EXPECT_EQ(t3.value, R(0));
  EXPECT_EQ(t3.argmin, (IntVector{0, 0}));
  // w = (1, 0): m = 0 and m = (-1, 0) tie at 0 with the identity.
  auto t4 = tropical_theta(identity2(), {R(1), R(0)});
  EXPECT_EQ(t4.value, R(0));
  EXPECT_EQ(t4.ties, 2u);
}

TEST(TropicalTheta, NonPositiveAndZeroAtOrigin) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 100; ++k) {
    const auto Q = testsupport::random_valuation_matrix(rng, 20);
    EXPECT_EQ(tropical_theta(Q, {R(0), R(0)}).value, R(0));
    EXPECT_LE(tropical_theta(Q, random_w(rng, 2, 20)).value, R(0));
  }
}

TEST(TropicalTheta, DoubledWindowAgrees) {
  std::mt19937_64 rng(62);
  for (int k = 0; k < 100; ++k) {
    const auto Q = testsupport::random_valuation_matrix(rng, 5);
    const auto w = random_w(rng, 2, 20);
    const auto th = tropical_theta(Q, w);
    // Box of twice the radius around the origin, also covering the search center.
    std::int64_t reach = 2 * th.radius;
    for (std::size_t i = 0; i < 2; ++i) reach = std::max(reach, std::abs(th.argmin[i]) + 2 * th.radius);
    ASSERT_EQ(th.value, testsupport::theta_box(Q, w, reach));
  }
}

TEST(TropicalTheta, ThreeDimensional) {
  const ValuationMatrix Q({{R(2), R(1), R(0)}, {R(1), R(3), R(1)}, {R(0), R(1), R(4)}});
  std::mt19937_64 rng(63);
  for (int k = 0; k < 30; ++k) {
    const auto w = random_w(rng, 3, 10);
    const auto th = tropical_theta(Q, w);
    ASSERT_EQ(th.value, testsupport::theta_box(Q, w, 8));
    ASSERT_TRUE(check_theta_transform(Q, w, random_n(rng, 3, 2)).equal);
    ASSERT_TRUE(check_lambda_invariance(Q, w, random_n(rng, 3, 2)).zero);
  }
}

TEST(ThetaTransform, Examples) {
  auto c1 = check_theta_transform(identity2(), {R(0), R(0)}, {1, 0});
  EXPECT_EQ(c1.lhs, R(-1));
  EXPECT_EQ(c1.rhs, R(-1));
  EXPECT_TRUE(c1.equal);
  EXPECT_TRUE(check_theta_transform(q215(), {R(1, 3), R(-2)}, {0, 0}).equal);
  EXPECT_TRUE(check_theta_transform(q215(), {R(1, 2), R(0)}, {1, 1}).equal);
  EXPECT_THROW(check_theta_transform(q215(), {R(1)}, {1, 1}), std::invalid_argument);
}

TEST(LambdaInvariance, Examples) {
  EXPECT_EQ(check_lambda_invariance(q215(), {R(3), R(1, 7)}, {0, 0}).delta, R(0));
  auto c = check_lambda_invariance(identity2(), {R(0), R(0)}, {1, 0});
  EXPECT_EQ(c.delta, R(0));
  EXPECT_TRUE(c.zero);
  std::mt19937_64 rng(64);
  EXPECT_TRUE(check_lambda_invariance(q215(), random_w(rng, 2, 20), {2, -1}).zero);
}

TEST(ThetaIdentities, RandomSuite) {
  std::mt19937_64 rng(65);
  for (int k = 0; k < 500; ++k) {
    const auto Q = testsupport::random_valuation_matrix(rng, 20);
    const auto w = random_w(rng, 2, 20);
    const auto n = random_n(rng, 2, 3);
    ASSERT_TRUE(check_theta_transform(Q, w, n).equal);
    ASSERT_TRUE(check_lambda_invariance(Q, w, n).zero);
  }
}
