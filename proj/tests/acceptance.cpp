// Acceptance run: one PASS/FAIL line per criterion.
//
//   padic_acceptance [--only N] [--expect-fail N,...]
//
// Exit status is 0 when the set of failing criteria equals the expected set
// (empty by default), so a known failure stays visible in the output without
// hiding a new one.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "padic/generators.hpp"
#include "padic/norms.hpp"
#include "padic/oracles.hpp"
#include "padic/random.hpp"
#include "padic/suites.hpp"

using namespace padic;
namespace mp = boost::multiprecision;

namespace {

using Wide = mp::number<mp::mpfr_float_backend<80>>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

Rational R(const char* s) { return parse_rational(s); }

Wide wide(const Rational& x) {
  return Wide(mp::numerator(x).str()) / Wide(mp::denominator(x).str());
}

// p^e computed on its own, outside Magnitude.
Wide wide_power(std::int64_t p, const Rational& e) { return mp::pow(Wide(p), wide(e)); }

bool close(const Magnitude& got, const Wide& want, double rel) {
  Wide g(got.to_real().str(60));
  if (want == 0) return g == 0;
  return mp::abs(g - want) <= Wide(rel) * mp::abs(want);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Rational int_pow(std::int64_t p, std::int64_t e) {
  Integer base(1);
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) base *= p;
  return e < 0 ? Rational(Integer(1), base) : Rational(base);
}

// 1. |B_gamma| = p^{n gamma}, |S_gamma| = p^{n gamma}(1 - p^{-n})
Outcome haar_identities() {
  Outcome o;
  int checks = 0;
  for (std::int64_t p : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      for (std::int64_t g = -6; g <= 6; ++g) {
        Rational ball = int_pow(p, n * g);
        Rational sphere = ball * (1 - int_pow(p, -n));
        checks += 2;
        if (haar_measure(Ball::centered(p, n, g)) != ball || haar_measure(p, n, g) != ball ||
            sphere_measure(p, n, g) != sphere) {
          o.pass = false;
          o.detail = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " gamma=" + std::to_string(g);
          return o;
        }
      }
    }
  }
  // children tile the parent
  for (std::int64_t p : {2, 3}) {
    Ball b = Ball::centered(p, 2, 1);
    Rational total(0);
    for (const auto& c : children(b)) total += haar_measure(c);
    ++checks;
    if (total != haar_measure(b)) o.pass = false;
  }
  o.detail = std::to_string(checks) + " exact equalities";
  return o;
}

// 2. ||chi_B||_q = p^{n gamma / q}; |B|^{-1} ||chi_B||_q ||chi_B||_q' = 1 (constant),
//    < 4 over a 50-ball family for a piecewise exponent.
Outcome characteristic_norms() {
  Outcome o;
  int checks = 0;
  for (std::int64_t p : {2, 3}) {
    for (int n = 1; n <= 2; ++n) {
      for (const char* qs : {"3/2", "2", "3"}) {
        Rational q = R(qs);
        auto e = ExponentFunction::constant(p, n, q);
        auto ec = conjugate(e);
        for (std::int64_t g = -3; g <= 3; ++g) {
          Ball b = Ball::centered(p, n, g);
          ++checks;
          if (!close(luxemburg_norm(SimpleFunction::indicator(b), e), wide_power(p, Rational(n * g) / q), 1e-12)) {
            o.pass = false;
            o.detail = "norm mismatch at p=" + std::to_string(p) + " q=" + qs + " gamma=" + std::to_string(g);
            return o;
          }
          Magnitude prod = chi_norm(b, e) * chi_norm(b, ec) / Magnitude(haar_measure(b));
          if (!(prod == Magnitude(1))) {
            o.pass = false;
            o.detail = "constant-case product " + prod.to_string() + " != 1";
            return o;
          }
        }
      }
    }
  }
  SimpleFunction base(2, 1,
                      {{Ball::centered(2, 1, 0), R("3/2")},
                       {Ball(PAdicPoint(2, {R("1/2")}), -1), R("3")},
                       {Ball(PAdicPoint(2, {R("1/4")}), -2), R("5/4")}});
  ExponentFunction q(base, R("2"));
  ExponentFunction qc = conjugate(q);
  Rng rng(2024);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    Ball b(rng.point_in(Ball::centered(2, 1, 3), 6), rng.uniform(-3, 3));
    double v = (chi_norm(b, q) * chi_norm(b, qc) / Magnitude(haar_measure(b))).to_double();
    worst = std::max(worst, v);
  }
  if (!(worst < 4)) o.pass = false;
  o.detail = std::to_string(checks) + " ball norms; piecewise C = " + fmt(worst);
  return o;
}

// 3. M_alpha(chi_B)(y) = |B|^{alpha/n} on B
Outcome maximal_identities() {
  Outcome o;
  Rng rng(31);
  const Rational alphas[] = {R("0"), R("1/2"), R("1")};
  int exact = 0;
  for (int k = 0; k < 100; ++k) {
    std::int64_t p = rng.coin() ? 2 : 3;
    Rational alpha = alphas[k % 3];
    int n = alpha >= 1 ? 2 : static_cast<int>(rng.uniform(1, 2));
    Ball b(rng.point_in(Ball::centered(p, n, 3), 6), rng.uniform(-3, 3));
    PAdicPoint y = rng.point_in(b, 6);
    Magnitude got = maximal_at(SimpleFunction::indicator(b), y, alpha);
    Rational e = Rational(b.gamma()) * alpha;
    bool ok;
    if (is_integer(e)) {
      auto r = got.as_rational();
      ok = r && *r == int_pow(p, static_cast<std::int64_t>(mp::numerator(e)));
      ++exact;
    } else {
      ok = close(got, wide_power(p, e), 1e-12);
    }
    if (!ok) {
      o.pass = false;
      o.detail = "B=" + b.to_string() + " alpha=" + to_string(alpha) + " got " + got.to_string();
      return o;
    }
  }
  o.detail = "100 samples, " + std::to_string(exact) + " exact";
  return o;
}

// 4. pointwise lemma suite
Outcome pointwise_suite() {
  Outcome o;
  std::string d;
  for (auto [p, n] : {std::pair<std::int64_t, int>{2, 1}, {3, 1}, {2, 2}}) {
    PointwiseConfig c;
    c.prime = p;
    c.dim = n;
    c.trials = 200;
    c.seed = 7;
    SuiteReport r = suite_pointwise_lemmas(c);
    d += "(" + std::to_string(p) + "," + std::to_string(n) + "): " + std::to_string(r.failures.size()) +
         " failures; ";
    if (!r.ok()) {
      o.pass = false;
      d += r.failures[0].check + " seed " + std::to_string(r.failures[0].seed) + "; ";
    }
  }
  o.detail = d + "600 trials";
  return o;
}

// 5. generalized Hoelder, int |fg| by an independent Riemann sum
Outcome holder() {
  Outcome o;
  Rng rng(55);
  SimpleFunction base(2, 1, {{Ball::centered(2, 1, -1), R("3")}, {Ball(PAdicPoint(2, {R("1/2")}), 0), R("5/4")}});
  ExponentFunction variable(base, R("2"));
  SimpleFunction base3(3, 1, {{Ball::centered(3, 1, 0), R("4")}});
  ExponentFunction variable3(base3, R("3/2"));
  double worst_var = 0;
  double worst_const = 0;
  for (int t = 0; t < 200; ++t) {
    const bool p3 = t % 2 == 1;
    GeneratorSpec g;
    g.prime = p3 ? 3 : 2;
    g.dim = 1;
    g.gamma_lo = -2;
    g.gamma_hi = 1;
    SimpleFunction f = gen_simple(g, rng);
    SimpleFunction h = gen_simple(g, rng);
    const ExponentFunction& qv = p3 ? variable3 : variable;
    const auto qc = ExponentFunction::constant(g.prime, 1, t % 4 < 2 ? R("3/2") : R("3"));
    Ball root = Ball::centered(g.prime, 1, 2);
    auto prod = [&](const PAdicPoint& y) { return f.evaluate(y) * h.evaluate(y); };
    Rational lhs = riemann_abs(prod, root, -2);
    for (const auto* q : {&qv, &qc}) {
      HolderResult r = holder_check(f, h, *q);
      if (r.lhs != lhs) {
        o.pass = false;
        o.detail = "integral mismatch at trial " + std::to_string(t);
        return o;
      }
      const bool constant = q == &qc;
      Magnitude bound = constant ? r.rhs : Magnitude(2) * r.rhs;
      if (!leq_with_slack(Magnitude(lhs), bound, precision::kInequalitySlack)) {
        o.pass = false;
        o.detail = std::string(constant ? "sharp" : "factor-2") + " bound fails at trial " + std::to_string(t);
        return o;
      }
      if (!r.rhs.is_zero()) {
        double v = (Magnitude(lhs) / r.rhs).to_double();
        (constant ? worst_const : worst_var) = std::max(constant ? worst_const : worst_var, v);
      }
    }
  }
  o.detail = "400 checks; worst lhs/rhs constant " + fmt(worst_const) + ", variable " + fmt(worst_var);
  return o;
}

// 6. lip^1 <= lip^q per ball, lip^q quantity <= Lambda_beta
Outcome norm_equivalence() {
  Outcome o;
  Rng rng(66);
  int balls = 0;
  for (int t = 0; t < 100; ++t) {
    GeneratorSpec g;
    g.prime = t % 3 == 2 ? 3 : 2;
    g.dim = t % 4 == 3 ? 2 : 1;
    SimpleFunction f = gen_simple(g, rng);
    Rational beta = t % 2 ? R("1/2") : R("1/3");
    Rational q = t % 5 < 3 ? R("2") : R("3");
    Magnitude lam = lambda_beta_norm(f, beta).value;
    NormReport rep = lip_beta_q_quantity(f, beta, q, BallFamily::auto_cutoff());
    if (!leq_with_slack(rep.value, lam, precision::kInequalitySlack)) {
      o.pass = false;
      o.detail = "quantity above Lambda at trial " + std::to_string(t);
      return o;
    }
    for (const auto& bv : rep.per_ball) {
      ++balls;
      if (!leq_with_slack(lip_ball(f, beta, 1, bv.ball), bv.value, precision::kInequalitySlack)) {
        o.pass = false;
        o.detail = "lip^1 > lip^q on " + bv.ball.to_string();
        return o;
      }
    }
  }
  o.detail = "100 functions, " + std::to_string(balls) + " balls";
  return o;
}

// 7. null cases and exact homogeneity
Outcome homogeneity() {
  Outcome o;
  CharacterizationConfig c;
  c.prime = 2;
  c.dim = 1;
  c.alpha = R("1/4");
  c.beta = R("1/2");
  c.trials = 6;
  auto q = ExponentFunction::constant(2, 1, R("2"));
  // constant on the window W, family inside W; and b = 0
  Ball w = Ball::centered(2, 1, 2);
  SimpleFunction b = SimpleFunction::indicator(w, R("5/3"));
  BallFamily inside = BallFamily::window_scan(w, -3, 2);
  SimpleFunction zero(2, 1);
  BallFamily autof = BallFamily::auto_cutoff();
  for (const auto& [fn, fam] : {std::pair{&b, &inside}, std::pair{&zero, &autof}}) {
    Magnitude v[] = {quantity_fracmax(*fn, c.alpha, c.beta, q, *fam).value,
                     quantity_oscillation(*fn, c.beta, q, *fam).value,
                     quantity_nonneg_max(*fn, c.beta, c.s, *fam).value};
    for (const auto& m : v) {
      if (!m.is_exact() || !m.is_zero()) {
        o.pass = false;
        o.detail = "null case gave " + m.to_string();
        return o;
      }
    }
  }
  SuiteReport r = suite_characterization(Direction::Scaling, autof, c);
  if (!r.ok()) {
    o.pass = false;
    o.detail = r.failures[0].check + ": " + r.failures[0].witness;
    return o;
  }
  o.detail = "6 null values exactly 0; " + *r.find_stat("scaling_checks") + " scaling checks";
  return o;
}

// 8. oscillator growth band
Outcome growth() {
  Outcome o;
  CharacterizationConfig c;
  c.prime = 2;
  c.dim = 1;
  c.alpha = R("1/4");
  c.beta = R("1/2");
  c.m_max = 5;
  c.band_limit = 10;
  SuiteReport r = suite_characterization(Direction::Negative, BallFamily::auto_cutoff(), c);
  o.pass = r.ok();
  o.detail = "values " + *r.find_stat("oscillation_values") + "; band " +
             *r.find_stat("band_oscillation_over_growth");
  if (!r.ok()) o.detail += "; " + r.failures[0].check;
  return o;
}

// 9. operator-norm boundedness at r = 2, alpha = beta = 1/2, n = 2
Outcome boundedness() {
  Outcome o;
  OperatorNormConfig c;
  c.prime = 2;
  c.dim = 2;
  c.alpha = R("1/2");
  c.beta = R("1/2");
  c.trials = 100;
  auto r2 = ExponentFunction::constant(2, 2, R("2"));
  std::string d;
  SuiteReport fm = suite_operator_norm(OperatorKind::FractionalMaximal, r2, c);
  d += "fractional_maximal q=" + *fm.find_stat("q_inf") + " max ratio " + *fm.find_stat("max_ratio");
  if (!fm.ok()) {
    o.pass = false;
    d += " (" + fm.failures[0].check + ")";
  }
  for (auto op : {OperatorKind::MaximalCommutator, OperatorKind::NonlinearCommutator}) {
    try {
      SuiteReport r = suite_operator_norm(op, r2, c);
      d += "; " + to_string(op) + " ratio/Lambda <= " + *r.find_stat("max_ratio_over_lambda");
      if (!r.ok()) o.pass = false;
    } catch (const ParameterError& e) {
      // alpha + beta = 1 makes n/(alpha+beta) = 2 = r_+: no admissible q
      o.pass = false;
      d += "; " + to_string(op) + ": " + e.what();
    }
  }
  if (!o.pass) {
    // supplementary: the same commutators one step inside the admissible range
    auto r32 = ExponentFunction::constant(2, 2, R("3/2"));
    for (auto op : {OperatorKind::MaximalCommutator, OperatorKind::NonlinearCommutator}) {
      SuiteReport r = suite_operator_norm(op, r32, c);
      d += "; at r=3/2 (q=" + *r.find_stat("q_inf") + ") " + to_string(op) + " ratio/Lambda <= " +
           *r.find_stat("max_ratio_over_lambda") + (r.ok() ? "" : " with failures");
    }
  }
  o.detail = d;
  return o;
}

// 10. fast paths against brute force
Outcome oracle_agreement() {
  Outcome o;
  Rng rng(1010);
  int checks = 0;
  for (int t = 0; t < 150; ++t) {
    GeneratorSpec g;
    g.prime = t % 2 ? 3 : 2;
    g.dim = t % 3 == 2 && g.prime == 2 ? 2 : 1;
    g.gamma_lo = -3;
    g.gamma_hi = g.dim == 2 ? 1 : 2;
    g.cells_max = 8;
    SimpleFunction f = gen_simple(g, rng);
    GeneratorSpec gb = g;
    gb.value_lo = 0;
    gb.nonneg = true;
    SimpleFunction b = gen_simple(gb, rng);
    Rational alpha = t % 4 == 0 ? R("0") : (t % 4 == 1 ? R("1/2") : R("1/3"));
    PAdicPoint x = rng.point_in(Ball::centered(g.prime, g.dim, 3), 6);
    Ball B(rng.point_in(Ball::centered(g.prime, g.dim, 3), 6), rng.uniform(-3, 3));
    checks += 3;
    if (!approx_equal(maximal_at(f, x, alpha), oracle_maximal(f, x, alpha), 1e-12)) {
      o.pass = false;
      o.detail = "maximal_at trial " + std::to_string(t);
      return o;
    }
    if (!approx_equal(maximal_commutator_at(b, f, x, alpha), oracle_maximal_commutator(b, f, x, alpha), 1e-12)) {
      o.pass = false;
      o.detail = "maximal_commutator_at trial " + std::to_string(t);
      return o;
    }
    if (average_over(f, B) != oracle_average(f, B)) {
      o.pass = false;
      o.detail = "average_over trial " + std::to_string(t);
      return o;
    }
  }
  o.detail = std::to_string(checks) + " comparisons";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  precision::set_digits(precision::digits_from_env());
  std::set<int> only;
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    auto list = [&](std::set<int>& into) {
      if (i + 1 >= argc) return false;
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) into.insert(std::stoi(item));
      return true;
    };
    bool ok = false;
    if (!std::strcmp(argv[i], "--only")) ok = list(only);
    if (!std::strcmp(argv[i], "--expect-fail")) ok = list(expected);
    if (!ok) {
      std::fprintf(stderr, "usage: %s [--only N,...] [--expect-fail N,...]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> all{
      {1, "haar identities", 1, haar_identities},
      {2, "characteristic-function norms", 10, characteristic_norms},
      {3, "maximal identities", 10, maximal_identities},
      {4, "pointwise lemma suite", 60, pointwise_suite},
      {5, "generalized Hoelder", 30, holder},
      {6, "norm-equivalence direction", 60, norm_equivalence},
      {7, "homogeneity and null cases", 30, homogeneity},
      {8, "oscillator growth band", 120, growth},
      {9, "operator-norm boundedness", 300, boundedness},
      {10, "oracle agreement", 60, oracle_agreement},
  };

  std::set<int> failed;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      out.pass = false;
      out.detail += "; over the " + fmt(c.budget_seconds) + " s budget";
    }
    if (!out.pass) failed.insert(c.id);
    std::printf("%s %2d %-32s %8.2fs  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::set<int> relevant;
  for (int id : expected) {
    if (only.empty() || only.count(id)) relevant.insert(id);
  }
  if (failed == relevant) return 0;
  for (int id : relevant) {
    if (!failed.count(id)) std::printf("criterion %d was expected to fail but passed\n", id);
  }
  return 1;
}
