#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "padic/magnitude.hpp"
#include "padic/rational.hpp"

namespace padic {

/// A value that is either 0 or an exact power p^exponent; the shape of every
/// p-adic absolute value and distance.
struct PAdicAbs {
  bool zero = true;
  std::int64_t exponent = 0;

  static PAdicAbs power(std::int64_t e) { return PAdicAbs{false, e}; }

  Magnitude to_magnitude(std::int64_t p) const {
    return zero ? Magnitude() : Magnitude(power_of(p, exponent));
  }

  friend std::strong_ordering operator<=>(const PAdicAbs& a, const PAdicAbs& b) {
    if (a.zero || b.zero) return (!a.zero) <=> (!b.zero);
    return a.exponent <=> b.exponent;
  }
  friend bool operator==(const PAdicAbs& a, const PAdicAbs& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

/// A point of Q_p^n with exact rational coordinates.
class PAdicPoint {
 public:
  PAdicPoint(std::int64_t prime, std::vector<Rational> coords);

  static PAdicPoint origin(std::int64_t prime, int dim);

  /// Parses one coordinate: either a rational "m/n" or a base-p digit string
  /// "gamma: a0 a1 a2 ..." meaning p^gamma * (a0 + a1 p + a2 p^2 + ...).
  static Rational parse_coordinate(std::string_view text, std::int64_t prime);

  std::int64_t prime() const { return prime_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](int j) const { return coords_[static_cast<std::size_t>(j)]; }

  PAdicPoint operator+(const PAdicPoint& other) const;
  PAdicPoint operator-(const PAdicPoint& other) const;

  std::string to_string() const;

  friend bool operator==(const PAdicPoint&, const PAdicPoint&) = default;

 private:
  std::int64_t prime_;
  std::vector<Rational> coords_;
};

/// The closed ball B_gamma(a) = {x : |x - a|_p <= p^gamma}, stored with a
/// canonical center so that equal balls have equal fields.
class Ball {
 public:
  Ball(const PAdicPoint& center, std::int64_t gamma);

  /// B_gamma(0) in Q_p^dim.
  static Ball centered(std::int64_t prime, int dim, std::int64_t gamma);

  std::int64_t prime() const { return center_.prime(); }
  int dim() const { return center_.dim(); }
  std::int64_t gamma() const { return gamma_; }
  const PAdicPoint& center() const { return center_; }

  bool contains(const PAdicPoint& x) const;
  /// The unique ball of radius p^g (g >= gamma) containing this one.
  Ball ancestor(std::int64_t g) const;

  std::string to_string() const;

  friend bool operator==(const Ball& a, const Ball& b) {
    return a.gamma_ == b.gamma_ && a.center_ == b.center_;
  }
  /// Lexicographic on (gamma, canonical center); used for deterministic
  /// tie-breaking.
  friend bool operator<(const Ball& a, const Ball& b);

 private:
  PAdicPoint center_;
  std::int64_t gamma_;
};

enum class BallRelation { Disjoint, FirstInsideSecond, SecondInsideFirst, Equal };

std::string to_string(BallRelation r);

/// Canonical representative of x modulo p^{-gamma}: the unique value in
/// [0, p^{-gamma}) with p-power denominator in the same residue class.
Rational canonical_coordinate(const Rational& x, std::int64_t p, std::int64_t gamma);

/// max_j |x_j|_p.
PAdicAbs abs_p(const PAdicPoint& x);

/// |x - y|_p. Throws std::invalid_argument on prime or dimension mismatch.
PAdicAbs distance(const PAdicPoint& x, const PAdicPoint& y);

BallRelation ball_relation(const Ball& first, const Ball& second);

inline bool intersects(const Ball& a, const Ball& b) {
  return ball_relation(a, b) != BallRelation::Disjoint;
}
/// inner is a subset of outer (equality allowed).
inline bool is_subset(const Ball& inner, const Ball& outer) {
  auto r = ball_relation(inner, outer);
  return r == BallRelation::FirstInsideSecond || r == BallRelation::Equal;
}

/// |B_gamma(a)|_h = p^{n gamma}.
Rational haar_measure(const Ball& ball);
Rational haar_measure(std::int64_t p, int dim, std::int64_t gamma);

/// |S_gamma(a)|_h = |B_gamma|_h - |B_{gamma-1}|_h.
Rational sphere_measure(std::int64_t p, int dim, std::int64_t gamma);

/// The p^dim balls of radius exponent gamma - 1 partitioning the ball.
std::vector<Ball> children(const Ball& ball);

/// The common value of |x - y|_p for x in first, y in second. Throws
/// std::invalid_argument unless the balls are disjoint.
PAdicAbs ball_distance(const Ball& first, const Ball& second);

/// The smallest ball containing every ball in the list (non-empty list).
Ball enclosing_ball(const std::vector<Ball>& balls);

/// sup of |x|_p over x in the ball.
PAdicAbs max_abs_in(const Ball& ball);

/// Throws std::invalid_argument when the two objects live in different spaces.
void require_same_space(std::int64_t p1, int n1, std::int64_t p2, int n2);

}  // namespace padic
