#include <gtest/gtest.h>

#include "padic/exponents.hpp"
#include "support.hpp"

using namespace padic;
using testing_support::Q;
using testing_support::ball;
using testing_support::pt;

namespace {

// 3/2 on B_0(0), 3 on B_{-1}(1), q_inf = 2
ExponentFunction piecewise() {
  SimpleFunction base(2, 1, {{ball(2, {"0"}, 0), Q("3/2")}, {ball(2, {"1/2"}, -1), Q("3")}});
  return ExponentFunction(base, Q("2"));
}

}  // namespace

TEST(Exponent, ClassBounds) {
  EXPECT_THROW(ExponentFunction::constant(2, 1, Q("1")), ParameterError);
  EXPECT_NO_THROW(ExponentFunction::constant(2, 1, Q("1"), ExponentClass::P1));
  EXPECT_THROW(ExponentFunction::constant(2, 1, Q("1/2"), ExponentClass::P1), ParameterError);
  SimpleFunction bad(2, 1, {{ball(2, {"0"}, 0), Q("1")}});
  EXPECT_THROW(ExponentFunction(bad, Q("2")), ParameterError);
}

TEST(Exponent, Evaluation) {
  auto q = piecewise();
  EXPECT_EQ(q.at(pt(2, {"2"})), Q("3/2"));
  EXPECT_EQ(q.at(pt(2, {"1/2"})), Q("3"));
  EXPECT_EQ(q.at(pt(2, {"1/4"})), Q("2"));
  EXPECT_FALSE(q.is_constant());
  EXPECT_TRUE(ExponentFunction::constant(3, 2, Q("5/2")).is_constant());
}

TEST(Exponent, Bounds) {
  auto q = piecewise();
  auto all = q_bounds(q);
  EXPECT_EQ(all.q_minus, Q("3/2"));
  EXPECT_EQ(all.q_plus, Q("3"));
  auto inner = q_bounds(q, ball(2, {"0"}, -1));
  EXPECT_EQ(inner.q_minus, Q("3/2"));
  EXPECT_EQ(inner.q_plus, Q("3/2"));
  // B_1(0) holds both cells and part of the exterior
  auto mid = q_bounds(q, Ball::centered(2, 1, 1));
  EXPECT_EQ(mid.q_minus, Q("3/2"));
  EXPECT_EQ(mid.q_plus, Q("3"));
  auto half = q_bounds(q, Ball::centered(2, 1, -1).ancestor(0));
  EXPECT_EQ(half.q_plus, Q("3/2"));
}

TEST(Exponent, Conjugate) {
  auto c = conjugate(piecewise());
  EXPECT_EQ(c.at(pt(2, {"0"})), Q("3"));
  EXPECT_EQ(c.at(pt(2, {"1/2"})), Q("3/2"));
  EXPECT_EQ(c.q_inf(), Q("2"));
  EXPECT_THROW(conjugate(ExponentFunction::constant(2, 1, Q("1"), ExponentClass::P1)), ParameterError);
}

TEST(Exponent, SobolevShift) {
  auto r = ExponentFunction::constant(2, 2, Q("3/2"));
  auto q = sobolev_shift(r, Q("1"));
  // 1/q = 2/3 - 1/2
  EXPECT_EQ(q.q_inf(), Q("6"));
  auto r2 = ExponentFunction::constant(2, 2, Q("2"));
  EXPECT_EQ(sobolev_shift(r2, Q("1/2")).q_inf(), Q("4"));
  try {
    sobolev_shift(r2, Q("1"), "(alpha+beta)");
    FAIL() << "expected ParameterError";
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("requires r_+ < n/(alpha+beta)"), std::string::npos);
  }
  EXPECT_THROW(sobolev_shift(r2, Q("0")), ParameterError);
}

TEST(LogHolder, ConstantExponent) {
  auto q = ExponentFunction::constant(3, 1, Q("2"));
  auto c = log_holder_constants(q, {Ball::centered(3, 1, 0), Ball::centered(3, 1, -2)}, 50);
  EXPECT_EQ(c.c0_literal, 0);
  EXPECT_EQ(c.c0_standard, 0);
  EXPECT_EQ(c.c_inf, 0);
  EXPECT_TRUE(c.class_b_implied);
}

TEST(LogHolder, Piecewise) {
  auto q = piecewise();
  auto c = log_holder_constants(q, {Ball::centered(2, 1, 1), Ball::centered(2, 1, -1)}, 400, 3);
  // B_1(0) sees 3/2..3; the literal form peaks at 0 on the constant B_{-1}(0)
  EXPECT_EQ(c.c0_literal, 0);
  EXPECT_EQ(c.c0_standard, Q("3/2"));
  EXPECT_GT(c.c_inf, 0);
  EXPECT_LE(c.c_inf_sampled, c.c_inf * (1 + 1e-30));
  EXPECT_EQ(c.pairs_sampled, 400);
  EXPECT_THROW(log_holder_constants(q, {}, 10), ParameterError);
}
