#include "padic/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace padic {

namespace mp = boost::multiprecision;

namespace {

std::int64_t finest_scale(const std::vector<const SimpleFunction*>& fs) {
  std::int64_t s = 0;
  bool any = false;
  for (const auto* f : fs) {
    for (const auto& c : f->cells()) {
      s = any ? std::min(s, c.ball.gamma()) : c.ball.gamma();
      any = true;
    }
  }
  return s;
}

template <typename Visit>
void enumerate_subballs(const Ball& ball, std::int64_t scale, Visit visit) {
  const std::int64_t p = ball.prime();
  const int n = ball.dim();
  if (scale >= ball.gamma()) {
    visit(ball.center(), haar_measure(ball));
    return;
  }
  const std::int64_t per = ball.gamma() - scale;
  const std::int64_t digits = per * n;
  if (static_cast<double>(digits) * std::log2(static_cast<double>(p)) > 21) {
    throw std::length_error("oracle enumeration too large");
  }
  // place[e] = p^{-gamma + e}, e = 0..per-1, all of absolute value > p^scale
  std::vector<Rational> place;
  for (std::int64_t e = 0; e < per; ++e) place.push_back(power_of(p, -ball.gamma() + e));
  const Rational mu = haar_measure(p, n, scale);
  std::vector<std::int64_t> d(static_cast<std::size_t>(digits), 0);
  while (true) {
    std::vector<Rational> c = ball.center().coords();
    for (int j = 0; j < n; ++j) {
      for (std::int64_t e = 0; e < per; ++e) {
        c[static_cast<std::size_t>(j)] += place[static_cast<std::size_t>(e)] *
                                          d[static_cast<std::size_t>(j * per + e)];
      }
    }
    visit(PAdicPoint(p, std::move(c)), mu);
    std::size_t k = 0;
    while (k < d.size() && ++d[k] == p) d[k++] = 0;
    if (k == d.size()) break;
  }
}

bool cell_inside(const Ball& cell, const PAdicPoint& x, std::int64_t gamma) {
  return cell.gamma() <= gamma && Ball(x, gamma).contains(cell.center());
}

std::int64_t top_scale(const SimpleFunction& f, const PAdicPoint& x, std::int64_t from) {
  std::int64_t g = from;
  while (!std::all_of(f.cells().begin(), f.cells().end(),
                      [&](const Cell& c) { return cell_inside(c.ball, x, g); })) {
    ++g;
  }
  return g;
}

Magnitude sup_terms(const std::function<Rational(const PAdicPoint&)>& g, const PAdicPoint& x,
                    const Rational& alpha, std::int64_t s, std::int64_t lo, std::int64_t hi) {
  const std::int64_t p = x.prime();
  const int n = x.dim();
  Magnitude best;
  for (std::int64_t gamma = lo; gamma <= hi; ++gamma) {
    Ball b(x, gamma);
    Rational integral = riemann_abs(g, b, std::min(s, gamma));
    if (integral == 0) continue;
    Magnitude term = Magnitude::scaled_power(integral, p, Rational(gamma) * (alpha - n));
    if (term > best) best = term;
  }
  return best;
}

}  // namespace

Rational riemann_abs(const std::function<Rational(const PAdicPoint&)>& g, const Ball& ball,
                     std::int64_t scale) {
  Rational total(0);
  enumerate_subballs(ball, scale, [&](const PAdicPoint& y, const Rational& mu) {
    total += mp::abs(g(y)) * mu;
  });
  return total;
}

Rational riemann_signed(const std::function<Rational(const PAdicPoint&)>& g, const Ball& ball,
                        std::int64_t scale) {
  Rational total(0);
  enumerate_subballs(ball, scale, [&](const PAdicPoint& y, const Rational& mu) {
    total += g(y) * mu;
  });
  return total;
}

Rational oracle_average(const SimpleFunction& f, const Ball& ball) {
  if (f.cells().empty()) return Rational(0);
  auto eval = [&](const PAdicPoint& y) { return f.evaluate(y); };
  return riemann_signed(eval, ball, finest_scale({&f})) / haar_measure(ball);
}

Magnitude oracle_maximal(const SimpleFunction& f, const PAdicPoint& x, const Rational& alpha,
                         int margin) {
  if (f.cells().empty()) return Magnitude();
  const std::int64_t s = finest_scale({&f});
  auto eval = [&](const PAdicPoint& y) { return f.evaluate(y); };
  return sup_terms(eval, x, alpha, s, s - margin, top_scale(f, x, s) + margin);
}

Magnitude oracle_maximal_commutator(const SimpleFunction& b, const SimpleFunction& f,
                                    const PAdicPoint& x, const Rational& alpha, int margin) {
  if (f.cells().empty()) return Magnitude();
  const std::int64_t s = b.cells().empty() ? finest_scale({&f}) : finest_scale({&b, &f});
  const Rational bx = b.evaluate(x);
  auto h = [&](const PAdicPoint& y) { return mp::abs(bx - b.evaluate(y)) * f.evaluate(y); };
  return sup_terms(h, x, alpha, s, s - margin, top_scale(f, x, s) + margin);
}

Magnitude oracle_oscillation(const SimpleFunction& b, const Rational& beta, std::int64_t q,
                             const Ball& ball) {
  const std::int64_t p = ball.prime();
  const std::int64_t s = b.cells().empty() ? ball.gamma() : finest_scale({&b});
  auto eval = [&](const PAdicPoint& y) { return b.evaluate(y); };
  const std::int64_t scale = std::min(s, ball.gamma());
  Rational mean = riemann_signed(eval, ball, scale) / haar_measure(ball);
  auto dev = [&](const PAdicPoint& y) { return pow_int(mp::abs(b.evaluate(y) - mean), q); };
  Rational avg = riemann_abs(dev, ball, scale) / haar_measure(ball);
  return Magnitude::power_of_p(p, -Rational(ball.gamma()) * beta) *
         Magnitude(avg).pow(Rational(1, q), p);
}

}  // namespace padic
