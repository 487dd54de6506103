#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "padic/random.hpp"
#include "padic/simple_function.hpp"

namespace padic {

struct GeneratorSpec {
  std::int64_t prime = 2;
  int dim = 1;
  /// Cell scales are drawn from [gamma_lo, gamma_hi]; cells live inside
  /// root, which defaults to B_{gamma_hi + 1}(0).
  std::int64_t gamma_lo = -3;
  std::int64_t gamma_hi = 1;
  int cells_min = 1;
  int cells_max = 6;
  Rational value_lo = -4;
  Rational value_hi = 4;
  /// Values are drawn on the grid (1/value_denominator) Z.
  std::int64_t value_denominator = 4;
  bool nonneg = false;
  std::uint64_t seed = 1;
  std::optional<Ball> root;

  /// Throws ParameterError on an inconsistent spec.
  void validate() const;
};

/// Disjoint cells found by random descent in the ball tree below the root,
/// with nonzero grid values. The same spec always yields the same function.
SimpleFunction gen_simple(const GeneratorSpec& spec);
SimpleFunction gen_simple(const GeneratorSpec& spec, Rng& rng);

enum class ProfileKind { RadialBeta, Oscillator, Indicator, Staircase };

ProfileKind parse_profile_kind(const std::string& name);
std::string to_string(ProfileKind kind);

struct ProfileSpec {
  ProfileKind kind = ProfileKind::Indicator;
  std::int64_t prime = 2;
  int dim = 1;
  /// RadialBeta: the exponent.
  Rational beta = Rational(1, 2);
  /// RadialBeta: window scale. Indicator: scale of the ball B_gamma(0).
  std::int64_t gamma = 0;
  /// RadialBeta: number of spheres resolved below the window scale.
  int depth = 4;
  /// Oscillator: cell scale -m.
  int m = 1;
  /// Staircase: number of steps.
  int steps = 3;
};

/// Test symbols for the characterization quantities.
///
/// RadialBeta: |x|_p^beta on the spheres S_k(0), gamma - depth < k <= gamma,
/// the inner ball B_{gamma-depth}(0) carrying the innermost level; values are
/// p^{k beta} rounded to the grid 2^-40 Z, so they are rational.
/// Oscillator: on B_0(0), 1 on the balls of scale -m whose last digit of the
/// first coordinate is odd, 0 on the rest.
/// Indicator: chi of B_gamma(0).
/// Staircase: sum over k = 1..steps of k chi_{S_k(0)}.
SimpleFunction gen_lipschitz_profile(const ProfileSpec& spec);

}  // namespace padic
