#include "padic/operators.hpp"

#include <algorithm>

namespace padic {

namespace mp = boost::multiprecision;

Magnitude StepMap::evaluate(const PAdicPoint& x) const {
  for (const auto& c : cells) {
    if (c.ball.contains(x)) return c.value;
  }
  return Magnitude();
}

void require_alpha(const Rational& alpha, int dim) {
  if (alpha < 0 || alpha >= dim) {
    throw ParameterError("requires 0 <= alpha < n (alpha = " + to_string(alpha) +
                         ", n = " + std::to_string(dim) + ")");
  }
}

namespace {

// Scans gamma in [lo, hi] over the integrand g, keeping the first maximum.
ScanResult scan_terms(const SimpleFunction& g, const PAdicPoint& x, const Rational& alpha,
                      std::int64_t lo, std::int64_t hi) {
  ScanResult out;
  out.gamma_lo = lo;
  out.gamma_hi = hi;
  const std::int64_t p = g.prime();
  const int n = g.dim();
  for (std::int64_t gamma = lo; gamma <= hi; ++gamma) {
    Rational integral = integral_abs_over(g, Ball(x, gamma));
    if (integral == 0) continue;
    Magnitude term = Magnitude::scaled_power(integral, p, Rational(gamma) * (alpha - n));
    if (!out.gamma || term > out.value) {
      out.value = term;
      out.gamma = gamma;
    }
  }
  return out;
}

// Lowest useful scale for x relative to a support ball: balls smaller than
// the distance to the support miss it entirely.
struct ScanRange {
  std::int64_t lo;
  std::int64_t hi;
};

ScanRange scan_range(const Ball& support, std::int64_t resolution, const PAdicPoint& x) {
  PAdicAbs d = distance(x, support.center());
  std::int64_t hi = support.gamma();
  std::int64_t lo = resolution;
  if (!d.zero && d.exponent > support.gamma()) {
    hi = d.exponent;
    lo = std::max(lo, d.exponent);
  }
  return {std::min(lo, hi), hi};
}

}  // namespace

ScanResult maximal_scan(const SimpleFunction& f, const PAdicPoint& x, const Rational& alpha,
                        int extra_scales) {
  require_same_space(f.prime(), f.dim(), x.prime(), x.dim());
  require_alpha(alpha, f.dim());
  auto support = f.support_ball();
  if (!support) return ScanResult{};
  ScanRange r = scan_range(*support, *f.resolution_scale(), x);
  return scan_terms(f, x, alpha, r.lo - extra_scales, r.hi + extra_scales);
}

Magnitude maximal_at(const SimpleFunction& f, const PAdicPoint& x, const Rational& alpha) {
  return maximal_scan(f, x, alpha).value;
}

StepMap maximal_fn(const SimpleFunction& f, const Rational& alpha, const Ball& window) {
  require_same_space(f.prime(), f.dim(), window.prime(), window.dim());
  require_alpha(alpha, f.dim());
  StepMap out;
  for (const auto& leaf : partition_ball(window, {&f.cells()})) {
    out.cells.push_back(StepCell{leaf.ball, maximal_at(f, leaf.ball.center(), alpha)});
  }
  return out;
}

RestrictedResult maximal_restricted(const SimpleFunction& f, const Ball& bstar,
                                    const PAdicPoint& x, const Rational& alpha,
                                    int extra_scales) {
  require_same_space(f.prime(), f.dim(), x.prime(), x.dim());
  require_alpha(alpha, f.dim());
  RestrictedResult out;
  if (!bstar.contains(x)) {
    out.outside_warning = true;
    return out;
  }
  auto support = f.support_ball();
  if (!support) return out;
  ScanRange r = scan_range(*support, *f.resolution_scale(), x);
  std::int64_t hi = bstar.gamma();
  std::int64_t lo = std::min(r.lo, hi) - extra_scales;
  ScanResult s = scan_terms(f, x, alpha, lo, hi);
  out.value = s.value;
  out.gamma = s.gamma;
  return out;
}

StepMap maximal_restricted_fn(const SimpleFunction& f, const Ball& bstar, const Rational& alpha) {
  require_same_space(f.prime(), f.dim(), bstar.prime(), bstar.dim());
  require_alpha(alpha, f.dim());
  StepMap out;
  for (const auto& leaf : partition_ball(bstar, {&f.cells()})) {
    out.cells.push_back(
        StepCell{leaf.ball, maximal_restricted(f, bstar, leaf.ball.center(), alpha).value});
  }
  return out;
}

ScanResult maximal_commutator_scan(const SimpleFunction& b, const SimpleFunction& f,
                                   const PAdicPoint& x, const Rational& alpha,
                                   int extra_scales) {
  require_same_space(b.prime(), b.dim(), f.prime(), f.dim());
  require_same_space(f.prime(), f.dim(), x.prime(), x.dim());
  require_alpha(alpha, f.dim());
  auto support = f.support_ball();
  if (!support) return ScanResult{};
  // h(y) = |b(x) - b(y)| |f(y)| on a partition refining both b and f.
  const Rational bx = b.evaluate(x);
  auto [rb, rf] = refine_common(b, f);
  std::vector<Cell> h;
  for (std::size_t i = 0; i < rf.cells().size(); ++i) {
    const Rational& fv = rf.cells()[i].value;
    if (fv == 0) continue;
    Rational v = mp::abs(bx - rb.cells()[i].value) * mp::abs(fv);
    if (v != 0) h.push_back(Cell{rf.cells()[i].ball, std::move(v)});
  }
  SimpleFunction integrand = make_unchecked(f.prime(), f.dim(), std::move(h));
  std::int64_t resolution = *f.resolution_scale();
  if (auto rb_scale = b.resolution_scale()) resolution = std::min(resolution, *rb_scale);
  ScanRange r = scan_range(*support, resolution, x);
  return scan_terms(integrand, x, alpha, r.lo - extra_scales, r.hi + extra_scales);
}

Magnitude maximal_commutator_at(const SimpleFunction& b, const SimpleFunction& f,
                                const PAdicPoint& x, const Rational& alpha) {
  return maximal_commutator_scan(b, f, x, alpha).value;
}

Magnitude nonlinear_commutator_at(const SimpleFunction& b, const SimpleFunction& f,
                                  const PAdicPoint& x, const Rational& alpha) {
  require_same_space(b.prime(), b.dim(), f.prime(), f.dim());
  Magnitude first = Magnitude(b.evaluate(x)) * maximal_at(f, x, alpha);
  Magnitude second = maximal_at(mul(b, f), x, alpha);
  return first - second;
}

StepMap maximal_commutator_fn(const SimpleFunction& b, const SimpleFunction& f,
                              const Rational& alpha, const Ball& window) {
  require_same_space(b.prime(), b.dim(), window.prime(), window.dim());
  require_alpha(alpha, f.dim());
  StepMap out;
  for (const auto& leaf : partition_ball(window, {&b.cells(), &f.cells()})) {
    out.cells.push_back(
        StepCell{leaf.ball, maximal_commutator_at(b, f, leaf.ball.center(), alpha)});
  }
  return out;
}

StepMap nonlinear_commutator_fn(const SimpleFunction& b, const SimpleFunction& f,
                                const Rational& alpha, const Ball& window) {
  require_same_space(b.prime(), b.dim(), window.prime(), window.dim());
  require_alpha(alpha, f.dim());
  StepMap out;
  SimpleFunction bf = mul(b, f);
  for (const auto& leaf : partition_ball(window, {&b.cells(), &f.cells()})) {
    const PAdicPoint& y = leaf.ball.center();
    Magnitude v = Magnitude(b.evaluate(y)) * maximal_at(f, y, alpha) - maximal_at(bf, y, alpha);
    out.cells.push_back(StepCell{leaf.ball, v});
  }
  return out;
}

}  // namespace padic
