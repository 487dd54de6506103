#include <gtest/gtest.h>

#include <boost/multiprecision/mpfr.hpp>

#include "padic/generators.hpp"
#include "padic/suites.hpp"
#include "support.hpp"

using namespace padic;
using testing_support::Q;
using testing_support::pt;

TEST(Generators, Deterministic) {
  GeneratorSpec g;
  g.prime = 3;
  g.dim = 2;
  g.seed = 123;
  EXPECT_EQ(gen_simple(g), gen_simple(g));
  g.seed = 124;
  GeneratorSpec h = g;
  h.seed = 125;
  EXPECT_FALSE(gen_simple(g) == gen_simple(h));
}

TEST(Generators, RangesRespected) {
  GeneratorSpec g;
  g.prime = 2;
  g.dim = 1;
  g.cells_min = 2;
  g.cells_max = 5;
  g.value_lo = -1;
  g.value_hi = 3;
  g.nonneg = true;
  for (std::uint64_t s = 1; s <= 50; ++s) {
    g.seed = s;
    auto f = gen_simple(g);
    EXPECT_LE(f.cells().size(), 5u);
    for (const auto& c : f.cells()) {
      EXPECT_GT(c.value, 0);
      EXPECT_LE(c.value, 3);
      EXPECT_GE(c.ball.gamma(), g.gamma_lo);
      EXPECT_LE(c.ball.gamma(), g.gamma_hi);
    }
  }
}

TEST(Generators, InvalidSpec) {
  GeneratorSpec g;
  g.gamma_lo = 2;
  g.gamma_hi = 1;
  EXPECT_THROW(gen_simple(g), ParameterError);
  GeneratorSpec h;
  h.prime = 4;
  EXPECT_THROW(gen_simple(h), ParameterError);
}

TEST(Profiles, IndicatorAndStaircase) {
  ProfileSpec ps;
  ps.kind = ProfileKind::Indicator;
  ps.prime = 3;
  auto chi = gen_lipschitz_profile(ps);
  EXPECT_EQ(chi.evaluate(pt(3, {"2"})), 1);
  EXPECT_EQ(chi.evaluate(pt(3, {"1/3"})), 0);
  ps.kind = ProfileKind::Staircase;
  ps.steps = 3;
  auto st = gen_lipschitz_profile(ps);
  // k on the sphere |x|_p = p^k
  EXPECT_EQ(st.evaluate(pt(3, {"1/3"})), 1);
  EXPECT_EQ(st.evaluate(pt(3, {"2/9"})), 2);
  EXPECT_EQ(st.evaluate(pt(3, {"1/27"})), 3);
  EXPECT_EQ(st.evaluate(pt(3, {"1"})), 0);
  EXPECT_EQ(st.evaluate(pt(3, {"1/81"})), 0);
}

TEST(Profiles, RadialMonotone) {
  ProfileSpec ps;
  ps.kind = ProfileKind::RadialBeta;
  ps.prime = 2;
  ps.beta = Q("1/2");
  ps.gamma = 2;
  ps.depth = 4;
  auto f = gen_lipschitz_profile(ps);
  Rational prev(-1);
  for (const char* x : {"4", "2", "1", "1/2", "1/4"}) {
    Rational v = f.evaluate(pt(2, {x}));
    EXPECT_GT(v, prev) << x;
    prev = v;
  }
  EXPECT_THROW(gen_lipschitz_profile([] {
                 ProfileSpec bad;
                 bad.kind = ProfileKind::RadialBeta;
                 bad.beta = 1;
                 return bad;
               }()),
               ParameterError);
}

TEST(Suites, PointwiseSmall) {
  for (std::int64_t p : {2, 3}) {
    PointwiseConfig c;
    c.prime = p;
    c.trials = 30;
    auto r = suite_pointwise_lemmas(c);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures[0].check + " " + r.failures[0].witness);
    EXPECT_GE(r.oracle_checks, 3);
  }
}

TEST(Suites, PointwiseDeterministic) {
  PointwiseConfig c;
  c.trials = 15;
  c.seed = 99;
  auto a = suite_pointwise_lemmas(c);
  auto b = suite_pointwise_lemmas(c);
  EXPECT_EQ(a.stats, b.stats);
  EXPECT_EQ(a.failures.size(), b.failures.size());
  EXPECT_EQ(trial_seed(1, 0), trial_seed(1, 0));
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
}

TEST(Suites, CharacterizationNegative) {
  CharacterizationConfig c;
  auto r = suite_characterization(Direction::Negative, BallFamily::auto_cutoff(), c);
  EXPECT_TRUE(r.ok());
  ASSERT_NE(r.find_stat("band_oscillation_over_growth"), nullptr);
}

TEST(Suites, CharacterizationScalingAndPositive) {
  CharacterizationConfig c;
  c.trials = 3;
  EXPECT_TRUE(suite_characterization(Direction::Scaling, BallFamily::auto_cutoff(), c).ok());
  auto pos = suite_characterization(Direction::Positive, BallFamily::auto_cutoff(), c);
  EXPECT_TRUE(pos.ok());
  EXPECT_EQ(pos.trials, 6);
}

TEST(OperatorNorm, SingleBallClosedForm) {
  // M_alpha chi_{B_0} is 1 on B_0 and p^{d(alpha-n)} on |x|_p = p^d, so
  // ||M||_q^q = 1 + (1 - p^{-n}) p^rho / (1 - p^rho), rho = n + q(alpha - n).
  using Wide = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;
  for (std::int64_t p : {2, 3}) {
    const int n = 2;
    auto r = ExponentFunction::constant(p, n, Q("2"));
    auto q = sobolev_shift(r, Q("1/2"));
    ASSERT_EQ(q.q_inf(), 4);
    auto f = SimpleFunction::indicator(Ball::centered(p, n, 0));
    auto t = operator_norm_trial(OperatorKind::FractionalMaximal, SimpleFunction(p, n), f, r, q, Q("1/2"));
    Wide P(p);
    Wide prho = pow(P, -4);
    Wide want = pow(1 + (1 - pow(P, -n)) * prho / (1 - prho), Wide(1) / 4);
    Wide got(t.ratio.to_real().str(60));
    EXPECT_LT(abs(got - want) / want, Wide(1e-40)) << p;
  }
}

TEST(OperatorNorm, ZeroSymbol) {
  auto r = ExponentFunction::constant(2, 2, Q("3/2"));
  auto q = sobolev_shift(r, Q("1"));
  GeneratorSpec g;
  g.dim = 2;
  auto f = gen_simple(g);
  for (auto op : {OperatorKind::MaximalCommutator, OperatorKind::NonlinearCommutator}) {
    auto t = operator_norm_trial(op, SimpleFunction(2, 2), f, r, q, Q("1/2"));
    EXPECT_TRUE(t.ratio.is_zero());
  }
}

TEST(OperatorNorm, Suites) {
  OperatorNormConfig c;
  c.trials = 4;
  c.oracle_every = 2;
  auto r2 = ExponentFunction::constant(2, 2, Q("2"));
  auto fm = suite_operator_norm(OperatorKind::FractionalMaximal, r2, c);
  EXPECT_TRUE(fm.ok());
  ASSERT_NE(fm.find_stat("max_ratio"), nullptr);
  // r = 2 sits on the edge n/(alpha+beta) = 2 for the commutators
  try {
    suite_operator_norm(OperatorKind::MaximalCommutator, r2, c);
    FAIL() << "expected ParameterError";
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("r_+ < n/(alpha+beta)"), std::string::npos);
  }
  auto r32 = ExponentFunction::constant(2, 2, Q("3/2"));
  auto mc = suite_operator_norm(OperatorKind::MaximalCommutator, r32, c);
  EXPECT_TRUE(mc.ok());
  EXPECT_EQ(*mc.find_stat("q_inf"), "6");
  ASSERT_NE(mc.find_stat("max_ratio_over_lambda"), nullptr);
  EXPECT_TRUE(suite_operator_norm(OperatorKind::NonlinearCommutator, r32, c).ok());
}

TEST(Parsing, Names) {
  EXPECT_EQ(parse_direction("scaling"), Direction::Scaling);
  EXPECT_THROW(parse_direction("sideways"), InputError);
  EXPECT_EQ(parse_operator_kind(to_string(OperatorKind::NonlinearCommutator)),
            OperatorKind::NonlinearCommutator);
  EXPECT_EQ(parse_profile_kind("oscillator"), ProfileKind::Oscillator);
  EXPECT_THROW(parse_profile_kind("zigzag"), InputError);
}
