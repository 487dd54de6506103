#include "padic/random.hpp"

#include <stdexcept>

namespace padic {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform with hi < lo");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return lo + static_cast<std::int64_t>(v % range);
}

Rational Rng::uniform_rational(const Rational& lo, const Rational& hi, std::int64_t denominator) {
  std::int64_t a = ceil_to_int64(lo * denominator);
  std::int64_t b = floor_to_int64(hi * denominator);
  if (b < a) throw std::invalid_argument("empty rational range");
  return Rational(uniform(a, b), denominator);
}

PAdicPoint Rng::point_in(const Ball& ball, int depth) {
  const std::int64_t p = ball.prime();
  std::vector<Rational> c = ball.center().coords();
  for (auto& x : c) {
    // digits at places p^{-gamma}, p^{-gamma+1}, ...
    for (int k = 0; k < depth; ++k) {
      x += power_of(p, -ball.gamma() + k) * uniform(0, p - 1);
    }
  }
  return PAdicPoint(p, std::move(c));
}

}  // namespace padic
