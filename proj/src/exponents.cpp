#include "padic/exponents.hpp"

#include <algorithm>

#include "padic/random.hpp"

namespace padic {

namespace mp = boost::multiprecision;

namespace {

void check_value(const Rational& q, ExponentClass cls) {
  if (cls == ExponentClass::P && q <= 1) {
    throw ParameterError("exponent values must satisfy q > 1 (got " + to_string(q) + ")");
  }
  if (cls == ExponentClass::P1 && q < 1) {
    throw ParameterError("exponent values must satisfy q >= 1 (got " + to_string(q) + ")");
  }
}

}  // namespace

ExponentFunction::ExponentFunction(SimpleFunction base, Rational q_inf, ExponentClass cls)
    : base_(std::move(base)), q_inf_(std::move(q_inf)), cls_(cls) {
  check_value(q_inf_, cls_);
  for (const auto& c : base_.cells()) check_value(c.value, cls_);
}

ExponentFunction ExponentFunction::constant(std::int64_t prime, int dim, const Rational& q,
                                            ExponentClass cls) {
  return ExponentFunction(SimpleFunction(prime, dim), q, cls);
}

Rational ExponentFunction::at(const PAdicPoint& x) const {
  require_same_space(prime(), dim(), x.prime(), x.dim());
  for (const auto& c : base_.cells()) {
    if (c.ball.contains(x)) return c.value;
  }
  return q_inf_;
}

bool ExponentFunction::is_constant() const {
  return std::all_of(cells().begin(), cells().end(),
                     [&](const Cell& c) { return c.value == q_inf_; });
}

ExponentBounds q_bounds(const ExponentFunction& q, const std::optional<Ball>& region) {
  bool any = false;
  ExponentBounds b;
  auto take = [&](const Rational& v) {
    if (!any) {
      b.q_minus = b.q_plus = v;
      any = true;
      return;
    }
    b.q_minus = std::min(b.q_minus, v);
    b.q_plus = std::max(b.q_plus, v);
  };
  if (!region) {
    take(q.q_inf());
    for (const auto& c : q.cells()) take(c.value);
    return b;
  }
  require_same_space(q.prime(), q.dim(), region->prime(), region->dim());
  for (const auto& leaf : partition_ball(*region, {&q.cells()})) {
    int k = leaf.owner[0];
    take(k >= 0 ? q.cells()[static_cast<std::size_t>(k)].value : q.q_inf());
  }
  return b;
}

ExponentFunction conjugate(const ExponentFunction& q) {
  if (q_bounds(q).q_minus <= 1) {
    throw ParameterError("conjugate requires q_- > 1");
  }
  auto conj = [](const Rational& v) { return v / (v - 1); };
  std::vector<Cell> cells = q.cells();
  for (auto& c : cells) c.value = conj(c.value);
  return ExponentFunction(make_unchecked(q.prime(), q.dim(), std::move(cells)), conj(q.q_inf()));
}

ExponentFunction sobolev_shift(const ExponentFunction& r, const Rational& sigma,
                               std::string_view sigma_name) {
  if (sigma <= 0) {
    throw ParameterError("requires " + std::string(sigma_name) + " > 0");
  }
  const Rational limit = Rational(r.dim()) / sigma;
  const Rational r_plus = q_bounds(r).q_plus;
  if (r_plus >= limit) {
    throw ParameterError("requires r_+ < n/" + std::string(sigma_name) + " (r_+ = " +
                         to_string(r_plus) + ", n/" + std::string(sigma_name) + " = " +
                         to_string(limit) + ")");
  }
  auto shift = [&](const Rational& v) {
    return 1 / (1 / v - sigma / r.dim());
  };
  std::vector<Cell> cells = r.cells();
  for (auto& c : cells) c.value = shift(c.value);
  return ExponentFunction(make_unchecked(r.prime(), r.dim(), std::move(cells)), shift(r.q_inf()));
}

namespace {

Real log_term(std::int64_t p, const PAdicAbs& radius) {
  Real rp(p);
  Real r = radius.zero ? Real(0) : radius.to_magnitude(p).to_real();
  return boost::multiprecision::log(rp + r) / boost::multiprecision::log(rp);
}

}  // namespace

LogHolderConstants log_holder_constants(const ExponentFunction& q, const std::vector<Ball>& family,
                                        int pair_sample, std::uint64_t seed) {
  if (family.empty()) throw ParameterError("log_holder_constants needs a nonempty family");
  LogHolderConstants out;
  out.c0_standard = 0;
  bool first = true;
  for (const auto& ball : family) {
    ExponentBounds b = q_bounds(q, ball);
    Rational lit = Rational(ball.gamma()) * (b.q_minus - b.q_plus);
    Rational std_form = Rational(std::abs(ball.gamma())) * (b.q_plus - b.q_minus);
    out.c0_literal = first ? lit : std::max(out.c0_literal, lit);
    out.c0_standard = std::max(out.c0_standard, std_form);
    first = false;
  }

  // Pieces: every cell plus the unbounded exterior. The sup of min(|x|,|y|)
  // over a pair of pieces is the smaller of their radii sup |x|.
  const std::int64_t p = q.prime();
  struct Piece {
    Rational value;
    std::optional<PAdicAbs> radius;  // nullopt: unbounded
  };
  std::vector<Piece> pieces;
  for (const auto& c : q.cells()) pieces.push_back({c.value, max_abs_in(c.ball)});
  pieces.push_back({q.q_inf(), std::nullopt});
  out.c_inf = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      Rational jump = mp::abs(pieces[i].value - pieces[j].value);
      if (jump == 0) continue;
      PAdicAbs r;
      if (!pieces[i].radius) {
        r = *pieces[j].radius;
      } else if (!pieces[j].radius) {
        r = *pieces[i].radius;
      } else {
        r = std::min(*pieces[i].radius, *pieces[j].radius);
      }
      Real v = Real(jump) * log_term(p, r);
      if (v > out.c_inf) out.c_inf = v;
    }
  }

  out.c_inf_sampled = 0;
  if (pair_sample > 0 && !q.cells().empty()) {
    Rng rng(seed);
    Ball support = *q.base().support_ball();
    std::int64_t far = support.gamma();
    PAdicAbs c = abs_p(support.center());
    if (!c.zero) far = std::max(far, c.exponent);
    auto draw = [&]() {
      std::int64_t k = rng.uniform(0, static_cast<std::int64_t>(q.cells().size()));
      if (k < static_cast<std::int64_t>(q.cells().size())) {
        return rng.point_in(q.cells()[static_cast<std::size_t>(k)].ball);
      }
      // an exterior point with |x|_p = p^d beyond the support
      std::int64_t d = far + rng.uniform(1, 6);
      std::vector<Rational> coords(static_cast<std::size_t>(q.dim()), Rational(0));
      coords[0] = power_of(p, -d) * rng.uniform(1, p - 1);
      return PAdicPoint(p, std::move(coords));
    };
    for (int s = 0; s < pair_sample; ++s) {
      PAdicPoint x = draw();
      PAdicPoint y = draw();
      Rational jump = mp::abs(q.at(x) - q.at(y));
      ++out.pairs_sampled;
      if (jump == 0) continue;
      Real v = Real(jump) * log_term(p, std::min(abs_p(x), abs_p(y)));
      if (v > out.c_inf_sampled) out.c_inf_sampled = v;
    }
  }
  return out;
}

}  // namespace padic
