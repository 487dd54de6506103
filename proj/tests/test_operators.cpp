#include <gtest/gtest.h>

#include "padic/generators.hpp"
#include "padic/operators.hpp"
#include "padic/oracles.hpp"
#include "padic/random.hpp"
#include "support.hpp"

using namespace padic;
using testing_support::Q;
using testing_support::ball;
using testing_support::pt;

TEST(Maximal, AlphaRange) {
  auto f = SimpleFunction::indicator(Ball::centered(2, 1, 0));
  EXPECT_THROW(maximal_at(f, pt(2, {"0"}), Q("1")), ParameterError);
  EXPECT_THROW(maximal_at(f, pt(2, {"0"}), Q("-1/2")), ParameterError);
  EXPECT_NO_THROW(maximal_at(f, pt(2, {"0"}), Q("0")));
}

TEST(Maximal, ZeroFunction) {
  SimpleFunction z(3, 1);
  EXPECT_TRUE(maximal_at(z, pt(3, {"5"}), Q("1/2")).is_zero());
}

TEST(Maximal, IndicatorOnItsBall) {
  // M_alpha chi_B = |B|^{alpha/n} = p^{gamma alpha} on B
  for (std::int64_t p : {2, 3}) {
    for (int n = 1; n <= 2; ++n) {
      for (std::int64_t g = -2; g <= 2; ++g) {
        for (const char* a : {"0", "1/2", "1/3"}) {
          Rational alpha = Q(a);
          if (alpha >= n) continue;
          Ball b = Ball::centered(p, n, g);
          auto f = SimpleFunction::indicator(b);
          Magnitude want = Magnitude::power_of_p(p, Rational(g) * alpha);
          EXPECT_EQ(maximal_at(f, b.center(), alpha), want);
        }
      }
    }
  }
}

TEST(Maximal, IndicatorOutside) {
  // |x|_p = p^d > p^gamma: smaller balls miss B, so the best is B_d(x),
  // p^{d(alpha - n)} |B| = 2^{-1} here
  auto f = SimpleFunction::indicator(Ball::centered(2, 1, 0));
  EXPECT_EQ(maximal_at(f, pt(2, {"1/4"}), Q("1/2")), Magnitude(Q("1/2")));
}

TEST(Maximal, AgreesWithOracle) {
  GeneratorSpec g;
  g.prime = 2;
  g.dim = 1;
  g.gamma_lo = -3;
  g.gamma_hi = 2;
  g.cells_max = 8;
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    auto f = gen_simple(g, rng);
    auto x = rng.point_in(Ball::centered(2, 1, 4), 8);
    for (const char* a : {"0", "1/2"}) {
      EXPECT_TRUE(approx_equal(maximal_at(f, x, Q(a)), oracle_maximal(f, x, Q(a)), 1e-12))
          << "trial " << t;
    }
  }
}

TEST(Maximal, StepMapMatchesPointwise) {
  GeneratorSpec g;
  g.prime = 3;
  g.dim = 1;
  g.seed = 17;
  auto f = gen_simple(g);
  Ball w = enclosing_ball(f.balls()).ancestor(enclosing_ball(f.balls()).gamma() + 1);
  StepMap m = maximal_fn(f, Q("1/2"), w);
  Rng rng(2);
  for (int k = 0; k < 40; ++k) {
    auto x = rng.point_in(w, 8);
    EXPECT_EQ(m.evaluate(x), maximal_at(f, x, Q("1/2")));
  }
}

TEST(Restricted, OutsideWarning) {
  auto f = SimpleFunction::indicator(Ball::centered(2, 1, 0));
  auto r = maximal_restricted(f, Ball::centered(2, 1, -1), pt(2, {"1"}), Q("1/2"));
  EXPECT_TRUE(r.outside_warning);
  EXPECT_TRUE(r.value.is_zero());
}

TEST(Restricted, BoundedByUnrestricted) {
  GeneratorSpec g;
  g.prime = 2;
  g.dim = 2;
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    auto f = gen_simple(g, rng);
    Ball bstar(rng.point_in(Ball::centered(2, 2, 2), 6), rng.uniform(-2, 2));
    auto x = rng.point_in(bstar, 6);
    auto r = maximal_restricted(f, bstar, x, Q("1/2"));
    EXPECT_FALSE(r.outside_warning);
    EXPECT_LE(r.value, maximal_at(f, x, Q("1/2")));
  }
}

TEST(Commutator, ConstantSymbolVanishes) {
  GeneratorSpec g;
  g.prime = 3;
  g.dim = 1;
  g.seed = 4;
  auto f = gen_simple(g);
  // b constant on a ball holding everything the scan can see near x
  auto b = SimpleFunction::indicator(Ball::centered(3, 1, 20), Q("5"));
  auto x = pt(3, {"1"});
  EXPECT_TRUE(maximal_commutator_at(b, f, x, Q("1/2")).is_zero());
  EXPECT_TRUE(nonlinear_commutator_at(b, f, x, Q("1/2")).is_zero());
}

TEST(Commutator, AgreesWithOracle) {
  GeneratorSpec g;
  g.prime = 3;
  g.dim = 1;
  g.gamma_lo = -2;
  g.gamma_hi = 1;
  g.cells_max = 5;
  GeneratorSpec gb = g;
  gb.value_lo = 0;
  gb.nonneg = true;
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    auto b = gen_simple(gb, rng);
    auto f = gen_simple(g, rng);
    auto x = rng.point_in(Ball::centered(3, 1, 3), 6);
    EXPECT_TRUE(approx_equal(maximal_commutator_at(b, f, x, Q("1/2")),
                             oracle_maximal_commutator(b, f, x, Q("1/2")), 1e-12))
        << "trial " << t;
    Magnitude nl = Magnitude(b.evaluate(x)) * oracle_maximal(f, x, Q("1/2")) -
                   oracle_maximal(mul(b, f), x, Q("1/2"));
    EXPECT_TRUE(approx_equal(nonlinear_commutator_at(b, f, x, Q("1/2")), nl, 1e-12));
  }
}

TEST(Commutator, StepMapsMatchPointwise) {
  GeneratorSpec g;
  g.prime = 2;
  g.dim = 1;
  g.seed = 3;
  auto f = gen_simple(g);
  g.seed = 4;
  g.value_lo = 0;
  g.nonneg = true;
  auto b = gen_simple(g);
  Ball w = Ball::centered(2, 1, 4);
  StepMap mc = maximal_commutator_fn(b, f, Q("1/4"), w);
  StepMap nc = nonlinear_commutator_fn(b, f, Q("1/4"), w);
  Rng rng(1);
  for (int k = 0; k < 40; ++k) {
    auto x = rng.point_in(w, 8);
    EXPECT_EQ(mc.evaluate(x), maximal_commutator_at(b, f, x, Q("1/4")));
    EXPECT_EQ(nc.evaluate(x), nonlinear_commutator_at(b, f, x, Q("1/4")));
  }
}
