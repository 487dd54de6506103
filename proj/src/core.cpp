#include "padic/core.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

namespace mp = boost::multiprecision;

void require_same_space(std::int64_t p1, int n1, std::int64_t p2, int n2) {
  if (p1 != p2) {
    throw std::invalid_argument("prime mismatch: " + std::to_string(p1) + " vs " +
                                std::to_string(p2));
  }
  if (n1 != n2) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(n1) + " vs " +
                                std::to_string(n2));
  }
}

PAdicPoint::PAdicPoint(std::int64_t prime, std::vector<Rational> coords)
    : prime_(prime), coords_(std::move(coords)) {
  require_prime(prime_);
  if (coords_.empty()) throw ParameterError("a point needs dim >= 1 coordinates");
}

PAdicPoint PAdicPoint::origin(std::int64_t prime, int dim) {
  return PAdicPoint(prime, std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
}

Rational PAdicPoint::parse_coordinate(std::string_view text, std::int64_t prime) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return parse_rational(text);
  std::string head(text.substr(0, colon));
  std::int64_t gamma = 0;
  try {
    std::size_t used = 0;
    gamma = std::stoll(head, &used);
    if (head.find_first_not_of(" \t", used) != std::string::npos) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("malformed digit string '" + std::string(text) + "'");
  }
  std::istringstream digits{std::string(text.substr(colon + 1))};
  Rational value(0);
  Rational place(1);
  std::string token;
  bool any = false;
  while (digits >> token) {
    std::int64_t d = -1;
    try {
      std::size_t used = 0;
      d = std::stoll(token, &used);
      if (used != token.size()) d = -1;
    } catch (const std::exception&) {
      d = -1;
    }
    if (d < 0 || d >= prime) {
      throw InputError("digit '" + token + "' out of range 0.." + std::to_string(prime - 1) +
                       " in '" + std::string(text) + "'");
    }
    value += place * d;
    place *= prime;
    any = true;
  }
  if (!any) throw InputError("digit string without digits: '" + std::string(text) + "'");
  return value * power_of(prime, gamma);
}

PAdicPoint PAdicPoint::operator+(const PAdicPoint& other) const {
  require_same_space(prime_, dim(), other.prime_, other.dim());
  std::vector<Rational> c(coords_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = coords_[j] + other.coords_[j];
  return PAdicPoint(prime_, std::move(c));
}

PAdicPoint PAdicPoint::operator-(const PAdicPoint& other) const {
  require_same_space(prime_, dim(), other.prime_, other.dim());
  std::vector<Rational> c(coords_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = coords_[j] - other.coords_[j];
  return PAdicPoint(prime_, std::move(c));
}

std::string PAdicPoint::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) s += ", ";
    s += padic::to_string(coords_[j]);
  }
  return s + ")";
}

Rational canonical_coordinate(const Rational& x, std::int64_t p, std::int64_t gamma) {
  // The class of x modulo p^k Z_p (k = -gamma) is represented by
  // p^k * {x p^-k}_p.
  std::int64_t k = -gamma;
  Rational scaled = x * power_of(p, -k);
  return power_of(p, k) * p_fractional_part(scaled, p);
}

Ball::Ball(const PAdicPoint& center, std::int64_t gamma) : center_(center), gamma_(gamma) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(center.dim()));
  for (const auto& x : center.coords()) {
    c.push_back(canonical_coordinate(x, center.prime(), gamma));
  }
  center_ = PAdicPoint(center.prime(), std::move(c));
}

Ball Ball::centered(std::int64_t prime, int dim, std::int64_t gamma) {
  return Ball(PAdicPoint::origin(prime, dim), gamma);
}

bool Ball::contains(const PAdicPoint& x) const {
  require_same_space(prime(), dim(), x.prime(), x.dim());
  for (int j = 0; j < dim(); ++j) {
    auto v = valuation(x[j] - center_[j], prime());
    if (v && *v < -gamma_) return false;
  }
  return true;
}

Ball Ball::ancestor(std::int64_t g) const {
  if (g < gamma_) throw std::invalid_argument("ancestor scale below ball scale");
  if (g == gamma_) return *this;
  return Ball(center_, g);
}

std::string Ball::to_string() const {
  return "B_" + std::to_string(gamma_) + center_.to_string();
}

bool operator<(const Ball& a, const Ball& b) {
  if (a.gamma_ != b.gamma_) return a.gamma_ < b.gamma_;
  const auto& ca = a.center_.coords();
  const auto& cb = b.center_.coords();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::string to_string(BallRelation r) {
  switch (r) {
    case BallRelation::Disjoint:
      return "Disjoint";
    case BallRelation::FirstInsideSecond:
      return "FirstInsideSecond";
    case BallRelation::SecondInsideFirst:
      return "SecondInsideFirst";
    case BallRelation::Equal:
      return "Equal";
  }
  return "?";
}

PAdicAbs abs_p(const PAdicPoint& x) {
  PAdicAbs best;
  for (const auto& c : x.coords()) {
    auto v = valuation(c, x.prime());
    if (!v) continue;
    PAdicAbs a = PAdicAbs::power(-*v);
    if (a > best) best = a;
  }
  return best;
}

PAdicAbs distance(const PAdicPoint& x, const PAdicPoint& y) { return abs_p(x - y); }

BallRelation ball_relation(const Ball& first, const Ball& second) {
  require_same_space(first.prime(), first.dim(), second.prime(), second.dim());
  std::int64_t big = std::max(first.gamma(), second.gamma());
  PAdicAbs d = distance(first.center(), second.center());
  if (d > PAdicAbs::power(big)) return BallRelation::Disjoint;
  if (first.gamma() == second.gamma()) return BallRelation::Equal;
  return first.gamma() < second.gamma() ? BallRelation::FirstInsideSecond
                                        : BallRelation::SecondInsideFirst;
}

Rational haar_measure(std::int64_t p, int dim, std::int64_t gamma) {
  return power_of(p, static_cast<std::int64_t>(dim) * gamma);
}

Rational haar_measure(const Ball& ball) {
  return haar_measure(ball.prime(), ball.dim(), ball.gamma());
}

Rational sphere_measure(std::int64_t p, int dim, std::int64_t gamma) {
  return haar_measure(p, dim, gamma) - haar_measure(p, dim, gamma - 1);
}

std::vector<Ball> children(const Ball& ball) {
  const std::int64_t p = ball.prime();
  const int n = ball.dim();
  // Child centers: c + sum_j d_j p^{-gamma} e_j with digits d_j in [0, p).
  Rational step = power_of(p, -ball.gamma());
  std::vector<Ball> out;
  std::vector<std::int64_t> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Rational> c = ball.center().coords();
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] += step * digits[static_cast<std::size_t>(j)];
    out.emplace_back(PAdicPoint(p, std::move(c)), ball.gamma() - 1);
    int j = 0;
    while (j < n && ++digits[static_cast<std::size_t>(j)] == p) {
      digits[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return out;
}

PAdicAbs ball_distance(const Ball& first, const Ball& second) {
  if (ball_relation(first, second) != BallRelation::Disjoint) {
    throw std::invalid_argument("ball_distance requires disjoint balls: " + first.to_string() +
                                ", " + second.to_string());
  }
  return distance(first.center(), second.center());
}

Ball enclosing_ball(const std::vector<Ball>& balls) {
  if (balls.empty()) throw std::invalid_argument("enclosing_ball of an empty list");
  const PAdicPoint& anchor = balls.front().center();
  std::int64_t gamma = balls.front().gamma();
  for (const auto& b : balls) {
    gamma = std::max(gamma, b.gamma());
    PAdicAbs d = distance(anchor, b.center());
    if (!d.zero) gamma = std::max(gamma, d.exponent);
  }
  return Ball(anchor, gamma);
}

PAdicAbs max_abs_in(const Ball& ball) {
  PAdicAbs c = abs_p(ball.center());
  PAdicAbs r = PAdicAbs::power(ball.gamma());
  return c > r ? c : r;
}

}  // namespace padic
