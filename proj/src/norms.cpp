#include "padic/norms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace padic {

namespace mp = boost::multiprecision;

void require_beta(const Rational& beta) {
  if (beta <= 0 || beta >= 1) {
    throw ParameterError("requires 0 < beta < 1 (beta = " + to_string(beta) + ")");
  }
}

namespace {

void append_terms(std::vector<ModularTerm>& out, const Ball& ball, const Magnitude& value,
                  const ExponentFunction& q) {
  if (value.is_zero()) return;
  if (q.cells().empty()) {
    out.push_back({value, Magnitude(haar_measure(ball)), q.q_inf()});
    return;
  }
  for (const auto& leaf : partition_ball(ball, {&q.cells()})) {
    int k = leaf.owner[0];
    const Rational& e = k >= 0 ? q.cells()[static_cast<std::size_t>(k)].value : q.q_inf();
    out.push_back({value, Magnitude(haar_measure(leaf.ball)), e});
  }
}

}  // namespace

std::vector<ModularTerm> modular_terms(const SimpleFunction& f, const ExponentFunction& q) {
  require_same_space(f.prime(), f.dim(), q.prime(), q.dim());
  std::vector<ModularTerm> out;
  for (const auto& c : f.cells()) append_terms(out, c.ball, Magnitude(c.value), q);
  return out;
}

std::vector<ModularTerm> modular_terms(const StepMap& g, const ExponentFunction& q) {
  std::vector<ModularTerm> out;
  for (const auto& c : g.cells) append_terms(out, c.ball, c.value, q);
  return out;
}

Magnitude modular_at(const std::vector<ModularTerm>& terms, const Magnitude& eta, std::int64_t prime) {
  Magnitude total;
  for (const auto& t : terms) {
    if (t.value.is_zero()) continue;
    total = total + t.weight * (t.value.abs() / eta).pow(t.exponent, prime);
  }
  return total;
}

Magnitude luxemburg_solve(const std::vector<ModularTerm>& terms, std::int64_t prime) {
  // F(eta) = sum_q W_q eta^{-q} with W_q = sum of weight |v|^q.
  std::map<Rational, Magnitude> groups;
  for (const auto& t : terms) {
    if (t.value.is_zero() || t.weight.is_zero()) continue;
    if (t.exponent < 1) throw ParameterError("Luxemburg exponents must be >= 1");
    Magnitude w = t.weight * t.value.abs().pow(t.exponent, prime);
    auto [it, fresh] = groups.try_emplace(t.exponent, w);
    if (!fresh) it->second = it->second + w;
  }
  if (groups.empty()) return Magnitude();
  if (groups.size() == 1) {
    const auto& [q, w] = *groups.begin();
    return w.pow(1 / q, prime);
  }

  std::vector<std::pair<Real, Real>> g;
  Real lo = 0;
  for (const auto& [q, w] : groups) {
    Real wr = w.to_real();
    Real qr(q);
    g.emplace_back(wr, qr);
    lo = mp::max(lo, Real(mp::pow(wr, 1 / qr)));
  }
  auto F = [&](const Real& eta) {
    Real s = 0;
    for (const auto& [w, q] : g) s += w * mp::pow(eta, -q);
    return s;
  };
  // F(lo) >= 1 from the largest group alone; at k*lo each of the k groups
  // contributes at most k^{-q} <= 1/k.
  Real hi = lo * static_cast<long>(g.size());
  const Real tol("1e-14");
  int steps = 0;
  while (hi - lo > tol * lo) {
    if (++steps > 200) {
      throw std::runtime_error("Luxemburg bisection did not reach relative 1e-14 in 200 steps");
    }
    Real mid = (lo + hi) / 2;
    if (F(mid) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // G(t) = F(e^t) - 1 is convex and decreasing, so Newton from the left end
  // increases monotonically to the root.
  Real t = mp::log(lo);
  const Real t_hi = mp::log(hi);
  const Real eps = mp::pow(Real(10), -static_cast<long>(precision::digits()) - 2);
  for (int i = 0; i < 64; ++i) {
    Real e = mp::exp(t);
    Real G = -1;
    Real dG = 0;
    for (const auto& [w, q] : g) {
      Real term = w * mp::pow(e, -q);
      G += term;
      dG -= q * term;
    }
    Real step = G / dG;
    t -= step;
    if (t > t_hi) t = t_hi;
    if (mp::abs(step) < eps) break;
  }
  return Magnitude::from_real(mp::exp(t));
}

Magnitude lq_norm(const SimpleFunction& f, const Rational& q) {
  if (q < 1) throw ParameterError("requires q >= 1 (q = " + to_string(q) + ")");
  return lq_modular(f, q).pow(1 / q, f.prime());
}

Magnitude luxemburg_norm(const SimpleFunction& f, const ExponentFunction& q) {
  return luxemburg_solve(modular_terms(f, q), f.prime());
}

Magnitude chi_norm(const Ball& ball, const ExponentFunction& q) {
  require_same_space(ball.prime(), ball.dim(), q.prime(), q.dim());
  std::vector<ModularTerm> terms;
  append_terms(terms, ball, Magnitude(1), q);
  return luxemburg_solve(terms, ball.prime());
}

// ---------------------------------------------------------------------------

BallFamily BallFamily::explicit_list(std::vector<Ball> balls) {
  if (balls.empty()) throw ParameterError("a ball family must be nonempty");
  for (const auto& b : balls) {
    require_same_space(balls.front().prime(), balls.front().dim(), b.prime(), b.dim());
  }
  BallFamily f;
  f.kind = FamilyKind::ExplicitList;
  f.balls = std::move(balls);
  return f;
}

BallFamily BallFamily::window_scan(const Ball& window, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ParameterError("window scan needs gamma_lo <= gamma_hi");
  BallFamily f;
  f.kind = FamilyKind::WindowScan;
  f.window = window;
  f.gamma_lo = lo;
  f.gamma_hi = hi;
  return f;
}

BallFamily BallFamily::auto_cutoff(int max_ancestors) {
  BallFamily f;
  f.kind = FamilyKind::AutoCutoff;
  f.max_ancestors = max_ancestors;
  return f;
}

std::vector<Ball> BallFamily::materialize() const {
  std::vector<Ball> out;
  switch (kind) {
    case FamilyKind::ExplicitList:
      out = balls;
      break;
    case FamilyKind::WindowScan: {
      const Ball& w = *window;
      std::vector<Ball> level{w};
      for (std::int64_t g = w.gamma(); g >= gamma_lo; --g) {
        if (g <= gamma_hi) out.insert(out.end(), level.begin(), level.end());
        if (g == gamma_lo) break;
        std::vector<Ball> next;
        for (const auto& b : level) {
          for (auto& c : children(b)) next.push_back(std::move(c));
        }
        level = std::move(next);
      }
      for (std::int64_t g = std::max(gamma_lo, w.gamma() + 1); g <= gamma_hi; ++g) {
        out.push_back(w.ancestor(g));
      }
      break;
    }
    case FamilyKind::AutoCutoff:
      throw std::logic_error("an AutoCutoff family is resolved against a function");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string BallFamily::describe() const {
  switch (kind) {
    case FamilyKind::ExplicitList:
      return "ExplicitList(" + std::to_string(balls.size()) + " balls)";
    case FamilyKind::WindowScan:
      return "WindowScan(" + window->to_string() + ", " + std::to_string(gamma_lo) + ", " +
             std::to_string(gamma_hi) + ")";
    case FamilyKind::AutoCutoff:
      return "AutoCutoff(cap " + std::to_string(max_ancestors) + ")";
  }
  return "?";
}

namespace {

using BallFn = std::function<Magnitude(const Ball&)>;

NormReport run_family(const std::string& quantity, const BallFamily& family,
                      const SimpleFunction& f, const BallFn& eval, const BallFn& ancestor_bound) {
  NormReport r;
  r.quantity = quantity;
  r.family = family.describe();
  auto consider = [&](const Ball& ball) {
    require_same_space(f.prime(), f.dim(), ball.prime(), ball.dim());
    Magnitude v = eval(ball);
    r.per_ball.push_back({ball, v});
    if (!r.gamma_lo || ball.gamma() < *r.gamma_lo) r.gamma_lo = ball.gamma();
    if (!r.gamma_hi || ball.gamma() > *r.gamma_hi) r.gamma_hi = ball.gamma();
    if (!r.witness_ball || v > r.value || (v == r.value && ball < *r.witness_ball)) {
      r.value = v;
      r.witness_ball = ball;
    }
  };
  if (family.kind != FamilyKind::AutoCutoff) {
    for (const auto& ball : family.materialize()) consider(ball);
    return r;
  }
  auto support = f.support_ball();
  if (!support) return r;
  for (const auto& ball : partition_split_nodes(*support, {&f.cells()})) consider(ball);
  r.cutoff_certified = false;
  for (int k = 1; k <= family.max_ancestors; ++k) {
    Ball up = support->ancestor(support->gamma() + k);
    if (r.witness_ball && ancestor_bound(up) <= r.value) {
      r.cutoff_certified = true;
      break;
    }
    consider(up);
  }
  r.family += " scanned " + std::to_string(r.per_ball.size()) + " balls";
  return r;
}

// (|B|^{-1} sum mu_i |v_i|^q)^{1/q}
Magnitude mean_power_root(const std::vector<std::pair<Ball, Magnitude>>& pieces,
                          const Rational& q, const Ball& ball) {
  const std::int64_t p = ball.prime();
  Magnitude sum;
  for (const auto& [b, v] : pieces) {
    if (v.is_zero()) continue;
    sum = sum + Magnitude(haar_measure(b)) * v.abs().pow(q, p);
  }
  return (sum / Magnitude(haar_measure(ball))).pow(1 / q, p);
}

Magnitude radius_weight(const Ball& ball, const Rational& beta) {
  // |B|^{-beta/n} = p^{-gamma beta}
  return Magnitude::power_of_p(ball.prime(), -Rational(ball.gamma()) * beta);
}

std::string str(const Rational& x) { return to_string(x); }

}  // namespace

NormReport lambda_beta_norm(const SimpleFunction& f, const Rational& beta) {
  require_beta(beta);
  NormReport r;
  r.quantity = "lambda_beta";
  r.family = "exact";
  r.parameters = {{"beta", str(beta)}};
  auto support = f.support_ball();
  if (!support || f.is_zero()) return r;
  const std::int64_t p = f.prime();
  std::vector<Cell> leaves = complete_partition(f, *support);

  // For each distance exponent keep the largest jump; the quotient is
  // jump * p^{-e beta}.
  struct Best {
    Rational jump;
    std::size_t i, j;
  };
  std::map<std::int64_t, Best> by_distance;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      Rational jump = mp::abs(leaves[i].value - leaves[j].value);
      if (jump == 0) continue;
      std::int64_t e = ball_distance(leaves[i].ball, leaves[j].ball).exponent;
      auto it = by_distance.find(e);
      if (it == by_distance.end()) {
        by_distance.emplace(e, Best{jump, i, j});
      } else if (jump > it->second.jump) {
        it->second = Best{jump, i, j};
      }
    }
  }
  bool have = false;
  for (const auto& [e, best] : by_distance) {
    Magnitude v = Magnitude::scaled_power(best.jump, p, -Rational(e) * beta);
    if (!have || v > r.value) {
      r.value = v;
      r.witness_pair = {leaves[best.i].ball.center(), leaves[best.j].ball.center()};
      have = true;
    }
  }

  // Exterior points at distance exactly p^{Gamma+1} from the whole support.
  std::size_t arg = 0;
  for (std::size_t i = 1; i < leaves.size(); ++i) {
    if (mp::abs(leaves[i].value) > mp::abs(leaves[arg].value)) arg = i;
  }
  const std::int64_t out_e = support->gamma() + 1;
  Magnitude ext = Magnitude::scaled_power(mp::abs(leaves[arg].value), p, -Rational(out_e) * beta);
  if (!have || ext > r.value) {
    std::vector<Rational> y = support->center().coords();
    y[0] += power_of(p, -out_e);
    r.value = ext;
    r.witness_pair = {leaves[arg].ball.center(), PAdicPoint(p, std::move(y))};
  }
  return r;
}

Magnitude lip_ball(const SimpleFunction& f, const Rational& beta, const Rational& q, const Ball& ball) {
  Rational mean = average_over(f, ball);
  std::vector<std::pair<Ball, Magnitude>> pieces;
  for (const auto& c : complete_partition(restrict(f, ball), ball)) {
    pieces.emplace_back(c.ball, Magnitude(Rational(c.value - mean)));
  }
  return radius_weight(ball, beta) * mean_power_root(pieces, q, ball);
}

Magnitude fracmax_ball(const SimpleFunction& b, const Rational& alpha, const Rational& beta,
                       const ExponentFunction& q, const Ball& ball) {
  const std::int64_t p = b.prime();
  StepMap m = maximal_restricted_fn(b, ball, alpha);
  Magnitude shrink = Magnitude::power_of_p(p, -Rational(ball.gamma()) * alpha);
  std::vector<ModularTerm> terms;
  for (const auto& c : m.cells) {
    Magnitude g = Magnitude(b.evaluate(c.ball.center())) - shrink * c.value;
    append_terms(terms, c.ball, g, q);
  }
  Magnitude num = luxemburg_solve(terms, p);
  if (num.is_zero()) return Magnitude();
  return radius_weight(ball, beta) * num / chi_norm(ball, q);
}

Magnitude oscillation_ball(const SimpleFunction& b, const Rational& beta, const ExponentFunction& q,
                           const Ball& ball) {
  Rational mean = average_over(b, ball);
  std::vector<ModularTerm> terms;
  for (const auto& c : complete_partition(restrict(b, ball), ball)) {
    append_terms(terms, c.ball, Magnitude(Rational(c.value - mean)), q);
  }
  Magnitude num = luxemburg_solve(terms, b.prime());
  if (num.is_zero()) return Magnitude();
  return radius_weight(ball, beta) * num / chi_norm(ball, q);
}

Magnitude nonneg_ball(const SimpleFunction& b, const Rational& beta, const Rational& s, const Ball& ball) {
  StepMap m = maximal_restricted_fn(b, ball, Rational(0));
  std::vector<std::pair<Ball, Magnitude>> pieces;
  for (const auto& c : m.cells) {
    pieces.emplace_back(c.ball, Magnitude(b.evaluate(c.ball.center())) - c.value);
  }
  return radius_weight(ball, beta) * mean_power_root(pieces, s, ball);
}

NormReport lip_beta_q_quantity(const SimpleFunction& f, const Rational& beta, const Rational& q,
                               const BallFamily& family) {
  require_beta(beta);
  if (q < 1) throw ParameterError("requires q >= 1 (q = " + to_string(q) + ")");
  const std::int64_t p = f.prime();
  Magnitude total_q = lq_modular(f, q);
  Rational total = integrate(f);
  auto bound = [&](const Ball& ball) {
    Magnitude mu(haar_measure(ball));
    Magnitude avg_q = (total_q / mu).pow(1 / q, p);
    Magnitude avg = Magnitude(Rational(mp::abs(total) / haar_measure(ball)));
    return Magnitude(2) * radius_weight(ball, beta) * (avg_q + avg);
  };
  NormReport r = run_family(
      "lip_beta_q", family, f, [&](const Ball& ball) { return lip_ball(f, beta, q, ball); }, bound);
  r.parameters = {{"beta", str(beta)}, {"q", str(q)}};
  return r;
}

namespace {

void require_fracmax_params(const Rational& alpha, const Rational& beta, int dim) {
  require_beta(beta);
  if (alpha <= 0) throw ParameterError("requires 0 < alpha (alpha = " + to_string(alpha) + ")");
  if (alpha + beta >= dim) {
    throw ParameterError("requires alpha + beta < n (alpha + beta = " + to_string(alpha + beta) +
                         ", n = " + std::to_string(dim) + ")");
  }
}

// 2 max|b| |B|^{-beta/n}: every per-ball integrand is bounded by 2 max|b|.
BallFn sup_bound(const SimpleFunction& b, const Rational& beta) {
  Rational m = b.max_abs();
  return [m, beta](const Ball& ball) { return Magnitude(Rational(2 * m)) * radius_weight(ball, beta); };
}

}  // namespace

NormReport quantity_fracmax(const SimpleFunction& b, const Rational& alpha, const Rational& beta,
                            const ExponentFunction& q, const BallFamily& family) {
  require_fracmax_params(alpha, beta, b.dim());
  require_same_space(b.prime(), b.dim(), q.prime(), q.dim());
  NormReport r = run_family(
      "fracmax", family, b,
      [&](const Ball& ball) { return fracmax_ball(b, alpha, beta, q, ball); }, sup_bound(b, beta));
  r.parameters = {{"alpha", str(alpha)}, {"beta", str(beta)}};
  return r;
}

NormReport quantity_oscillation(const SimpleFunction& b, const Rational& beta,
                                const ExponentFunction& q, const BallFamily& family) {
  require_beta(beta);
  require_same_space(b.prime(), b.dim(), q.prime(), q.dim());
  NormReport r = run_family(
      "oscillation", family, b,
      [&](const Ball& ball) { return oscillation_ball(b, beta, q, ball); }, sup_bound(b, beta));
  r.parameters = {{"beta", str(beta)}};
  return r;
}

NormReport quantity_nonneg_max(const SimpleFunction& b, const Rational& beta, const Rational& s,
                               const BallFamily& family) {
  require_beta(beta);
  if (s < 1) throw ParameterError("requires s >= 1 (s = " + to_string(s) + ")");
  NormReport r = run_family(
      "nonneg_max", family, b, [&](const Ball& ball) { return nonneg_ball(b, beta, s, ball); },
      sup_bound(b, beta));
  r.parameters = {{"beta", str(beta)}, {"s", str(s)}};
  return r;
}

HolderResult holder_check(const SimpleFunction& f, const SimpleFunction& g, const ExponentFunction& q) {
  HolderResult h;
  h.lhs = integrate(abs(mul(f, g)));
  h.rhs = luxemburg_norm(f, q) * luxemburg_norm(g, conjugate(q));
  if (!h.rhs.is_zero()) h.ratio = Magnitude(h.lhs) / h.rhs;
  return h;
}

}  // namespace padic
