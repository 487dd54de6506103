#include "padic/suites.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "padic/oracles.hpp"

namespace padic {

namespace mp = boost::multiprecision;

const std::string* SuiteReport::find_stat(const std::string& key) const {
  for (const auto& [k, v] : stats) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::uint64_t trial_seed(std::uint64_t base, int trial) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

constexpr double kSlack = precision::kInequalitySlack;

// Exact when both sides are exact; relative 1e-30 otherwise. Non-integer
// powers of p make some values Reals, so bit equality is not available.
bool homogeneous_equal(const Magnitude& a, const Magnitude& b) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return approx_equal(a, b, 1e-30);
}

Rational pick(Rng& rng, const std::vector<Rational>& options) {
  return options[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(options.size()) - 1))];
}

}  // namespace

SuiteReport suite_pointwise_lemmas(const PointwiseConfig& cfg) {
  if (cfg.trials < 1) throw ParameterError("suite needs trials >= 1");
  const auto t0 = Clock::now();
  const std::int64_t p = cfg.prime;
  const int n = cfg.dim;
  SuiteReport rep;
  rep.suite = "pointwise";
  rep.trials = cfg.trials;
  double worst_commutator = 0;
  const Ball region = Ball::centered(p, n, 2);

  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed, t);
    Rng rng(seed);
    const Rational beta = pick(rng, {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                     Rational(3, 4)});
    // alpha on the grid (1/4)Z with alpha + beta < n
    const std::int64_t kmax = ceil_to_int64((Rational(n) - beta) * 4) - 1;
    const Rational alpha(rng.uniform(0, kmax), 4);

    GeneratorSpec gb;
    gb.prime = p;
    gb.dim = n;
    gb.gamma_lo = -3;
    gb.gamma_hi = 1;
    gb.cells_min = 1;
    gb.cells_max = 5;
    gb.value_lo = 0;
    gb.value_hi = 4;
    gb.nonneg = true;
    GeneratorSpec gf = gb;
    gf.value_lo = -4;
    gf.nonneg = false;
    const SimpleFunction b = gen_simple(gb, rng);
    const SimpleFunction f = gen_simple(gf, rng);
    const PAdicPoint x = rng.point_in(region, 6);
    const Ball B(rng.point_in(region, 6), rng.uniform(-3, 2));

    std::ostringstream ctx;
    ctx << "alpha=" << to_string(alpha) << " beta=" << to_string(beta) << " x=" << x.to_string()
        << " B=" << B.to_string();
    auto fail = [&](const std::string& check, const std::string& detail) {
      rep.failures.push_back({check, t, seed, ctx.str() + " " + detail});
    };

    const NormReport lam = lambda_beta_norm(b, beta);

    // commutator pointwise bound
    {
      Magnitude lhs = nonlinear_commutator_at(b, f, x, alpha).abs();
      Magnitude rhs = lam.value * maximal_at(f, x, alpha + beta);
      if (!leq_with_slack(lhs, rhs, kSlack)) {
        fail("commutator_pointwise", "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string());
      }
      if (!rhs.is_zero()) worst_commutator = std::max(worst_commutator, (lhs / rhs).to_double());
    }

    // maximal function of an indicator on its ball
    {
      const PAdicPoint y = rng.point_in(B, 6);
      Magnitude got = maximal_at(SimpleFunction::indicator(B), y, alpha);
      Magnitude want = Magnitude::power_of_p(p, Rational(B.gamma()) * alpha);
      if (!approx_equal(got, want, 1e-12)) {
        fail("maximal_indicator", "got=" + got.to_string() + " want=" + want.to_string());
      }
    }

    // |b_B| <= |B|^{-alpha/n} M_{alpha,B}(b)(y) on every cell representative
    {
      Magnitude mean(Rational(mp::abs(average_over(b, B))));
      Magnitude shrink = Magnitude::power_of_p(p, -Rational(B.gamma()) * alpha);
      for (const auto& leaf : partition_ball(B, {&b.cells()})) {
        Magnitude rhs = shrink * maximal_restricted(b, B, leaf.ball.center(), alpha).value;
        if (!leq_with_slack(mean, rhs, kSlack)) {
          fail("mean_domination", "y=" + leaf.ball.center().to_string() + " |b_B|=" +
                                      mean.to_string() + " rhs=" + rhs.to_string());
          break;
        }
      }
    }

    // int_E |b - b_B| = int_F |b - b_B|
    {
      Rational mean = average_over(b, B);
      Rational e(0);
      Rational fsum(0);
      for (const auto& c : complete_partition(restrict(b, B), B)) {
        Rational d = c.value - mean;
        if (d <= 0) {
          e += -d * haar_measure(c.ball);
        } else {
          fsum += d * haar_measure(c.ball);
        }
      }
      if (e != fsum) fail("mean_split", "E=" + to_string(e) + " F=" + to_string(fsum));
    }

    // |b(x) - b(y)| <= ||b||_Lambda |x - y|^beta, equality at the witness
    {
      auto draw = [&]() {
        if (!b.cells().empty() && rng.coin()) {
          const auto& cells = b.cells();
          return rng.point_in(cells[static_cast<std::size_t>(
                                  rng.uniform(0, static_cast<std::int64_t>(cells.size()) - 1))]
                                  .ball,
                              6);
        }
        return rng.point_in(Ball::centered(p, n, 4), 8);
      };
      for (int k = 0; k < 16; ++k) {
        PAdicPoint u = draw();
        PAdicPoint v = draw();
        PAdicAbs d = distance(u, v);
        if (d.zero) continue;
        Magnitude lhs(Rational(mp::abs(b.evaluate(u) - b.evaluate(v))));
        Magnitude rhs = lam.value * Magnitude::power_of_p(p, Rational(d.exponent) * beta);
        if (!leq_with_slack(lhs, rhs, lam.exact() ? 0.0 : kSlack)) {
          fail("lipschitz_pointwise", "u=" + u.to_string() + " v=" + v.to_string());
          break;
        }
      }
      if (lam.witness_pair) {
        const auto& [u, v] = *lam.witness_pair;
        Magnitude lhs(Rational(mp::abs(b.evaluate(u) - b.evaluate(v))));
        Magnitude rhs =
            lam.value * Magnitude::power_of_p(p, Rational(distance(u, v).exponent) * beta);
        if (!approx_equal(lhs, rhs, 1e-12)) {
          fail("lipschitz_witness", "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string());
        }
      }
    }

    if (cfg.oracle_every > 0 && t % cfg.oracle_every == 0) {
      ++rep.oracle_checks;
      if (!approx_equal(maximal_at(f, x, alpha), oracle_maximal(f, x, alpha), 1e-12)) {
        fail("oracle_maximal", "");
      }
      if (!approx_equal(maximal_commutator_at(b, f, x, alpha),
                        oracle_maximal_commutator(b, f, x, alpha), 1e-12)) {
        fail("oracle_maximal_commutator", "");
      }
      if (average_over(b, B) != oracle_average(b, B)) fail("oracle_average", "");
    }
  }
  rep.stat("prime", std::to_string(p));
  rep.stat("dim", std::to_string(n));
  rep.stat("worst_commutator_ratio", fmt(worst_commutator));
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

Direction parse_direction(const std::string& name) {
  if (name == "positive") return Direction::Positive;
  if (name == "negative") return Direction::Negative;
  if (name == "scaling") return Direction::Scaling;
  throw InputError("unknown direction '" + name + "'");
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Positive:
      return "positive";
    case Direction::Negative:
      return "negative";
    case Direction::Scaling:
      return "scaling";
  }
  return "?";
}

namespace {

struct Quantities {
  Magnitude fracmax;
  Magnitude oscillation;
  Magnitude nonneg;
  bool certified = true;
};

Quantities all_quantities(const SimpleFunction& b, const CharacterizationConfig& cfg,
                          const ExponentFunction& q, const BallFamily& family) {
  Quantities out;
  NormReport f = quantity_fracmax(b, cfg.alpha, cfg.beta, q, family);
  NormReport o = quantity_oscillation(b, cfg.beta, q, family);
  NormReport m = quantity_nonneg_max(b, cfg.beta, cfg.s, family);
  out.fracmax = f.value;
  out.oscillation = o.value;
  out.nonneg = m.value;
  out.certified = f.cutoff_certified && o.cutoff_certified && m.cutoff_certified;
  return out;
}

struct Band {
  double lo = 0;
  double hi = 0;
  bool any = false;
  void add(double v) {
    lo = any ? std::min(lo, v) : v;
    hi = any ? std::max(hi, v) : v;
    any = true;
  }
  std::string str() const { return any ? "[" + fmt(lo) + ", " + fmt(hi) + "]" : "[]"; }
};

}  // namespace

SuiteReport suite_characterization(Direction direction, const BallFamily& family,
                                   const CharacterizationConfig& cfg) {
  const auto t0 = Clock::now();
  const std::int64_t p = cfg.prime;
  const int n = cfg.dim;
  const ExponentFunction q = cfg.q ? *cfg.q : ExponentFunction::constant(p, n, Rational(2));
  SuiteReport rep;
  rep.suite = "characterization/" + to_string(direction);

  switch (direction) {
    case Direction::Positive: {
      std::vector<std::pair<std::string, SimpleFunction>> symbols;
      ProfileSpec ps;
      ps.prime = p;
      ps.dim = n;
      ps.beta = cfg.beta;
      ps.kind = ProfileKind::Indicator;
      symbols.emplace_back("indicator", gen_lipschitz_profile(ps));
      ps.kind = ProfileKind::Staircase;
      ps.steps = 3;
      symbols.emplace_back("staircase", gen_lipschitz_profile(ps));
      ps.kind = ProfileKind::RadialBeta;
      ps.gamma = 1;
      ps.depth = 4;
      symbols.emplace_back("radial_beta", gen_lipschitz_profile(ps));
      for (int t = 0; t < cfg.trials; ++t) {
        GeneratorSpec g;
        g.prime = p;
        g.dim = n;
        g.gamma_lo = -2;
        g.gamma_hi = 1;
        g.cells_max = 4;
        g.value_lo = 0;
        g.value_hi = 4;
        g.nonneg = true;
        g.seed = trial_seed(cfg.seed, t);
        symbols.emplace_back("random#" + std::to_string(t), gen_simple(g));
      }
      Band bf, bo, bn;
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        const auto& [name, b] = symbols[i];
        Magnitude lam = lambda_beta_norm(b, cfg.beta).value;
        Quantities qs = all_quantities(b, cfg, q, family);
        if (!qs.certified) {
          rep.failures.push_back({"cutoff_not_certified", static_cast<int>(i), cfg.seed, name});
        }
        if (lam.is_zero()) continue;
        bf.add((qs.fracmax / lam).to_double());
        bo.add((qs.oscillation / lam).to_double());
        bn.add((qs.nonneg / lam).to_double());
      }
      rep.trials = static_cast<int>(symbols.size());
      rep.stat("band_fracmax_over_lambda", bf.str());
      rep.stat("band_oscillation_over_lambda", bo.str());
      rep.stat("band_nonneg_over_lambda", bn.str());
      break;
    }
    case Direction::Negative: {
      Band bf, bo, bn;
      std::optional<Magnitude> prev;
      std::string table;
      for (int m = 1; m <= cfg.m_max; ++m) {
        ProfileSpec ps;
        ps.kind = ProfileKind::Oscillator;
        ps.prime = p;
        ps.dim = n;
        ps.m = m;
        SimpleFunction b = gen_lipschitz_profile(ps);
        Quantities qs = all_quantities(b, cfg, q, family);
        Magnitude growth = Magnitude::power_of_p(p, Rational(m) * cfg.beta);
        bf.add((qs.fracmax / growth).to_double());
        bo.add((qs.oscillation / growth).to_double());
        bn.add((qs.nonneg / growth).to_double());
        table += (m > 1 ? "; " : "") + std::to_string(m) + ":" + fmt(qs.oscillation.to_double());
        if (prev && !(qs.oscillation > *prev)) {
          rep.failures.push_back({"oscillation_not_increasing", m, cfg.seed,
                                  "m=" + std::to_string(m) + " value=" + qs.oscillation.to_string()});
        }
        if (!qs.certified) {
          rep.failures.push_back({"cutoff_not_certified", m, cfg.seed, "m=" + std::to_string(m)});
        }
        prev = qs.oscillation;
      }
      rep.trials = cfg.m_max;
      if (!bo.any || bo.lo <= 0 || bo.hi / bo.lo >= cfg.band_limit) {
        rep.failures.push_back({"oscillation_band", 0, cfg.seed, "band=" + bo.str()});
      }
      rep.stat("oscillation_values", table);
      rep.stat("band_oscillation_over_growth", bo.str());
      rep.stat("band_fracmax_over_growth", bf.str());
      rep.stat("band_nonneg_over_growth", bn.str());
      break;
    }
    case Direction::Scaling: {
      std::vector<SimpleFunction> symbols;
      for (int t = 0; t < std::max(1, cfg.trials); ++t) {
        GeneratorSpec g;
        g.prime = p;
        g.dim = n;
        g.gamma_lo = -2;
        g.gamma_hi = 1;
        g.cells_max = 4;
        g.value_lo = 0;
        g.value_hi = 4;
        g.nonneg = true;
        g.seed = trial_seed(cfg.seed, t);
        symbols.push_back(gen_simple(g));
      }
      const std::vector<Rational> lambdas{Rational(1, 2), Rational(2), Rational(7, 3)};
      int checks = 0;
      for (std::size_t i = 0; i < symbols.size(); ++i) {
        const SimpleFunction& b = symbols[i];
        Quantities base = all_quantities(b, cfg, q, family);
        for (const auto& lambda : lambdas) {
          Quantities scaled = all_quantities(scale(b, lambda), cfg, q, family);
          Magnitude l(lambda);
          const std::pair<const char*, std::pair<Magnitude, Magnitude>> cases[] = {
              {"fracmax", {scaled.fracmax, l * base.fracmax}},
              {"oscillation", {scaled.oscillation, l * base.oscillation}},
              {"nonneg_max", {scaled.nonneg, l * base.nonneg}},
          };
          for (const auto& [name, pair] : cases) {
            ++checks;
            if (!homogeneous_equal(pair.first, pair.second)) {
              rep.failures.push_back({std::string("scaling_") + name, static_cast<int>(i), cfg.seed,
                                      "lambda=" + to_string(lambda) + " got=" +
                                          pair.first.to_string() + " want=" +
                                          pair.second.to_string()});
            }
          }
        }
      }
      rep.trials = static_cast<int>(symbols.size());
      rep.stat("scaling_checks", std::to_string(checks));
      break;
    }
  }
  rep.stat("family", family.describe());
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

OperatorKind parse_operator_kind(const std::string& name) {
  if (name == "fractional_maximal") return OperatorKind::FractionalMaximal;
  if (name == "maximal_commutator") return OperatorKind::MaximalCommutator;
  if (name == "nonlinear_commutator") return OperatorKind::NonlinearCommutator;
  throw InputError("unknown operator '" + name + "'");
}

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::FractionalMaximal:
      return "fractional_maximal";
    case OperatorKind::MaximalCommutator:
      return "maximal_commutator";
    case OperatorKind::NonlinearCommutator:
      return "nonlinear_commutator";
  }
  return "?";
}

OperatorTrial operator_norm_trial(OperatorKind op, const SimpleFunction& b, const SimpleFunction& f,
                                  const ExponentFunction& r, const ExponentFunction& q,
                                  const Rational& alpha) {
  const std::int64_t p = f.prime();
  const int n = f.dim();
  std::vector<Ball> all = f.balls();
  if (op != OperatorKind::FractionalMaximal) {
    for (const auto& c : b.cells()) all.push_back(c.ball);
  }
  for (const auto& c : r.cells()) all.push_back(c.ball);
  for (const auto& c : q.cells()) all.push_back(c.ball);
  if (all.empty()) all.push_back(Ball::centered(p, n, 0));
  Ball tight = enclosing_ball(all);
  OperatorTrial out{StepMap{}, Magnitude(), Magnitude(), Magnitude(), tight.ancestor(tight.gamma() + 2)};

  Rational mass(0);
  switch (op) {
    case OperatorKind::FractionalMaximal:
      out.output = maximal_fn(f, alpha, out.window);
      mass = integrate(abs(f));
      break;
    case OperatorKind::MaximalCommutator:
      out.output = maximal_commutator_fn(b, f, alpha, out.window);
      mass = integrate(abs(mul(b, f)));
      break;
    case OperatorKind::NonlinearCommutator:
      out.output = nonlinear_commutator_fn(b, f, alpha, out.window);
      mass = integrate(abs(mul(b, f)));
      break;
  }

  std::vector<ModularTerm> terms = modular_terms(out.output, q);
  if (mass != 0) {
    // Outside the window |op f| = p^{d(alpha-n)} mass on the sphere S_d,
    // d > Gamma_W; summing sphere measures gives mass^{q_inf} times
    // (1 - p^{-n}) p^{(Gamma_W+1) rho} / (1 - p^rho), rho = n + q_inf (alpha - n).
    const Rational rho = Rational(n) + q.q_inf() * (alpha - n);
    if (rho >= 0) {
      throw ParameterError("the exterior of the window has infinite modular (q_inf too small)");
    }
    Magnitude weight = Magnitude(Rational(1) - power_of(p, -n)) *
                       Magnitude::power_of_p(p, Rational(out.window.gamma() + 1) * rho) /
                       (Magnitude(1) - Magnitude::power_of_p(p, rho));
    terms.push_back({Magnitude(mass), weight, q.q_inf()});
  }
  out.output_norm = luxemburg_solve(terms, p);
  out.input_norm = luxemburg_norm(f, r);
  if (!out.input_norm.is_zero()) out.ratio = out.output_norm / out.input_norm;
  return out;
}

SuiteReport suite_operator_norm(OperatorKind op, const ExponentFunction& r,
                                const OperatorNormConfig& cfg) {
  const auto t0 = Clock::now();
  const std::int64_t p = cfg.prime;
  const int n = cfg.dim;
  require_same_space(p, n, r.prime(), r.dim());
  require_alpha(cfg.alpha, n);
  const bool commutator = op != OperatorKind::FractionalMaximal;
  Rational sigma = cfg.alpha;
  std::string sigma_name = "alpha";
  if (commutator) {
    require_beta(cfg.beta);
    if (cfg.alpha + cfg.beta >= n) throw ParameterError("requires alpha + beta < n");
    sigma += cfg.beta;
    sigma_name = "(alpha+beta)";
  }
  const ExponentFunction q = sobolev_shift(r, sigma, sigma_name);

  SuiteReport rep;
  rep.suite = "operator_norm/" + to_string(op);
  rep.trials = cfg.trials;
  double worst = 0;
  double worst_over_lambda = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed, t);
    Rng rng(seed);
    GeneratorSpec gf = cfg.functions;
    gf.prime = p;
    gf.dim = n;
    const SimpleFunction f = gen_simple(gf, rng);
    SimpleFunction b(p, n);
    if (commutator) {
      GeneratorSpec gb = gf;
      gb.value_lo = 0;
      gb.nonneg = true;
      b = gen_simple(gb, rng);
    }
    OperatorTrial trial = operator_norm_trial(op, b, f, r, q, cfg.alpha);
    const double ratio = trial.ratio.to_double();
    if (!std::isfinite(ratio)) {
      rep.failures.push_back({"ratio_not_finite", t, seed, trial.ratio.to_string()});
      continue;
    }
    worst = std::max(worst, ratio);
    if (commutator) {
      Magnitude lam = lambda_beta_norm(b, cfg.beta).value;
      if (!lam.is_zero()) {
        double v = (trial.ratio / lam).to_double();
        if (!std::isfinite(v)) {
          rep.failures.push_back({"ratio_over_lambda_not_finite", t, seed, ""});
        } else {
          worst_over_lambda = std::max(worst_over_lambda, v);
        }
      }
    }
    if (cfg.oracle_every > 0 && t % cfg.oracle_every == 0) {
      ++rep.oracle_checks;
      for (int k = 0; k < 3; ++k) {
        PAdicPoint y = rng.point_in(trial.window, 4);
        Magnitude fast = trial.output.evaluate(y);
        Magnitude slow;
        switch (op) {
          case OperatorKind::FractionalMaximal:
            slow = oracle_maximal(f, y, cfg.alpha);
            break;
          case OperatorKind::MaximalCommutator:
            slow = oracle_maximal_commutator(b, f, y, cfg.alpha);
            break;
          case OperatorKind::NonlinearCommutator:
            slow = Magnitude(b.evaluate(y)) * oracle_maximal(f, y, cfg.alpha) -
                   oracle_maximal(mul(b, f), y, cfg.alpha);
            break;
        }
        if (!approx_equal(fast, slow, 1e-12)) {
          rep.failures.push_back({"oracle_operator_output", t, seed,
                                  "y=" + y.to_string() + " fast=" + fast.to_string() +
                                      " oracle=" + slow.to_string()});
        }
      }
    }
  }
  rep.stat("q_inf", to_string(q.q_inf()));
  rep.stat("max_ratio", fmt(worst));
  if (commutator) rep.stat("max_ratio_over_lambda", fmt(worst_over_lambda));
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

}  // namespace padic
