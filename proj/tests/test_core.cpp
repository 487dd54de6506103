#include <gtest/gtest.h>

#include "padic/core.hpp"
#include "padic/random.hpp"
#include "support.hpp"

using namespace padic;
using testing_support::Q;
using testing_support::ball;
using testing_support::pt;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Rational, Valuation) {
  EXPECT_EQ(valuation(Q("12"), 2), 2);
  EXPECT_EQ(valuation(Q("3/8"), 2), -3);
  EXPECT_EQ(valuation(Q("5/9"), 3), -2);
  EXPECT_FALSE(valuation(Q("0"), 5).has_value());
}

TEST(Rational, FractionalPart) {
  // 7/4 = 1 + 3/4 in Q_2
  EXPECT_EQ(p_fractional_part(Q("7/4"), 2), Q("3/4"));
  // -1/3 = 2/3 - 1, and -1 is a 3-adic integer
  EXPECT_EQ(p_fractional_part(Q("-1/3"), 3), Q("2/3"));
  EXPECT_EQ(p_fractional_part(Q("5/3"), 2), Q("0"));
}

TEST(Rational, RequirePrime) {
  EXPECT_NO_THROW(require_prime(7));
  EXPECT_THROW(require_prime(1), ParameterError);
  EXPECT_THROW(require_prime(9), ParameterError);
}

TEST(Point, AbsoluteValue) {
  EXPECT_EQ(abs_p(pt(2, {"1/4", "3"})), PAdicAbs::power(2));
  EXPECT_EQ(abs_p(pt(3, {"9"})), PAdicAbs::power(-2));
  EXPECT_TRUE(abs_p(pt(5, {"0", "0"})).zero);
}

TEST(Point, DigitStrings) {
  // gamma = -1, digits 1 0 1: 2^{-1}(1 + 0*2 + 1*4) = 5/2
  EXPECT_EQ(PAdicPoint::parse_coordinate("-1: 1 0 1", 2), Q("5/2"));
  EXPECT_EQ(PAdicPoint::parse_coordinate("2: 1", 3), Q("9"));
  EXPECT_THROW(PAdicPoint::parse_coordinate("0: 3", 3), InputError);
  EXPECT_THROW(PAdicPoint::parse_coordinate("x: 1", 3), InputError);
}

TEST(Point, DistanceMismatch) {
  EXPECT_THROW(distance(pt(2, {"1"}), pt(3, {"1"})), std::invalid_argument);
  EXPECT_THROW(distance(pt(2, {"1"}), pt(2, {"1", "0"})), std::invalid_argument);
}

TEST(Ball, Membership) {
  Ball b = ball(2, {"1"}, -1);  // 1 + 2Z_2
  EXPECT_TRUE(b.contains(pt(2, {"3"})));
  EXPECT_TRUE(b.contains(pt(2, {"1/3"})));
  EXPECT_FALSE(b.contains(pt(2, {"2"})));
  EXPECT_FALSE(b.contains(pt(2, {"1/2"})));
}

TEST(Ball, CanonicalCenter) {
  EXPECT_EQ(ball(3, {"10"}, -1), ball(3, {"1"}, -1));
  EXPECT_EQ(ball(2, {"7/4"}, 1), ball(2, {"3/4"}, 1));
  EXPECT_FALSE(ball(2, {"1"}, -1) == ball(2, {"1"}, -2));
}

TEST(Ball, Dichotomy) {
  std::int64_t p = 3;
  Rng rng(11);
  Ball root = Ball::centered(p, 1, 2);
  for (int t = 0; t < 300; ++t) {
    Ball a(rng.point_in(root, 6), rng.uniform(-3, 2));
    Ball b(rng.point_in(root, 6), rng.uniform(-3, 2));
    // Nested or disjoint, checked through membership of random points.
    auto r = ball_relation(a, b);
    int inside = 0;
    for (int k = 0; k < 20; ++k) {
      PAdicPoint x = rng.point_in(a, 6);
      if (b.contains(x)) ++inside;
    }
    switch (r) {
      case BallRelation::Disjoint:
        EXPECT_EQ(inside, 0);
        EXPECT_EQ(distance(a.center(), b.center()), ball_distance(a, b));
        break;
      case BallRelation::FirstInsideSecond:
      case BallRelation::Equal:
        EXPECT_EQ(inside, 20);
        break;
      case BallRelation::SecondInsideFirst:
        EXPECT_LT(b.gamma(), a.gamma());
        EXPECT_TRUE(a.contains(b.center()));
        break;
    }
  }
}

TEST(Ball, Children) {
  Ball b = ball(2, {"1", "0"}, 0);
  auto kids = children(b);
  ASSERT_EQ(kids.size(), 4u);
  Rational total(0);
  for (const auto& k : kids) {
    EXPECT_TRUE(is_subset(k, b));
    total += haar_measure(k);
  }
  EXPECT_EQ(total, haar_measure(b));
  for (std::size_t i = 0; i < kids.size(); ++i)
    for (std::size_t j = i + 1; j < kids.size(); ++j) EXPECT_FALSE(intersects(kids[i], kids[j]));
}

TEST(Ball, HaarIdentities) {
  EXPECT_EQ(haar_measure(ball(3, {"0"}, 2)), Q("9"));
  EXPECT_EQ(haar_measure(2, 2, -1), Q("1/4"));
  EXPECT_EQ(sphere_measure(2, 1, 0), Q("1/2"));
  EXPECT_EQ(sphere_measure(5, 2, 1), Q("24"));
}

TEST(Ball, Enclosing) {
  Ball e = enclosing_ball({ball(2, {"0"}, -2), ball(2, {"1"}, -3)});
  EXPECT_EQ(e, Ball::centered(2, 1, 0));
  EXPECT_EQ(enclosing_ball({ball(3, {"1/3"}, -1)}), ball(3, {"1/3"}, -1));
  EXPECT_EQ(max_abs_in(ball(2, {"1/4"}, -5)), PAdicAbs::power(2));
  EXPECT_EQ(max_abs_in(Ball::centered(2, 1, 3)), PAdicAbs::power(3));
}

TEST(Random, Deterministic) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.uniform(-5, 17), b.uniform(-5, 17));
  Rng c(3);
  for (int i = 0; i < 200; ++i) {
    auto v = c.uniform(2, 4);
    EXPECT_GE(v, 2);
    EXPECT_LE(v, 4);
  }
  Ball bb = ball(5, {"2", "1/5"}, -2);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(bb.contains(c.point_in(bb)));
}
