#pragma once

#include <cstdint>
#include <random>

#include "padic/core.hpp"

namespace padic {

/// Seeded generator with distributions written out by hand, so a seed gives
/// the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform rational in [lo, hi] on a grid of step 1/denominator.
  Rational uniform_rational(const Rational& lo, const Rational& hi, std::int64_t denominator);
  bool coin() { return (next() >> 63) != 0; }

  /// A point of the ball with `depth` random base-p digits below its center.
  PAdicPoint point_in(const Ball& ball, int depth = 8);

 private:
  std::mt19937_64 engine_;
};

}  // namespace padic
