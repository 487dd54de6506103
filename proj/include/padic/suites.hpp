#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padic/generators.hpp"
#include "padic/norms.hpp"

namespace padic {

struct SuiteFailure {
  std::string check;
  int trial = 0;
  std::uint64_t seed = 0;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  std::vector<SuiteFailure> failures;
  /// Empirical constants and bands, in insertion order.
  std::vector<std::pair<std::string, std::string>> stats;
  int oracle_checks = 0;
  double runtime_seconds = 0;

  bool ok() const { return failures.empty(); }
  void stat(const std::string& key, const std::string& value) { stats.emplace_back(key, value); }
  const std::string* find_stat(const std::string& key) const;
};

/// Seed of trial t under a base seed (splitmix64 of the pair).
std::uint64_t trial_seed(std::uint64_t base, int trial);

struct PointwiseConfig {
  std::int64_t prime = 2;
  int dim = 1;
  int trials = 200;
  std::uint64_t seed = 7;
  /// Every k-th trial is re-checked against the brute-force oracles.
  int oracle_every = 5;
};

/// Draws (b >= 0, f, x, B, alpha, beta) per trial and checks the commutator
/// pointwise bound, M_alpha(chi_B) = |B|^{alpha/n} on B, the b_B domination,
/// the exact mean-split identity and the Lipschitz pointwise bound with an
/// attained witness.
SuiteReport suite_pointwise_lemmas(const PointwiseConfig& config);

enum class Direction { Positive, Negative, Scaling };

Direction parse_direction(const std::string& name);
std::string to_string(Direction d);

struct CharacterizationConfig {
  std::int64_t prime = 2;
  int dim = 1;
  Rational alpha = Rational(1, 4);
  Rational beta = Rational(1, 2);
  Rational s = 2;
  /// Exponent for the fracmax and oscillation quantities; constant 2 when
  /// empty.
  std::optional<ExponentFunction> q;
  std::uint64_t seed = 7;
  /// Positive direction: random nonnegative symbols on top of the profiles.
  int trials = 6;
  /// Negative direction: oscillator(m) for m = 1..m_max.
  int m_max = 5;
  /// Negative direction: allowed C/c of the growth band.
  double band_limit = 10;
};

/// positive: quantity / Lambda_beta over Lipschitz symbols, band recorded.
/// negative: oscillator(m) growth against p^{m beta}; the oscillation
/// quantity must stay in a band with C/c < band_limit and increase strictly.
/// scaling: quantity(lambda b) = lambda quantity(b) for lambda in {1/2, 2, 7/3}.
SuiteReport suite_characterization(Direction direction, const BallFamily& family,
                                   const CharacterizationConfig& config);

enum class OperatorKind { FractionalMaximal, MaximalCommutator, NonlinearCommutator };

OperatorKind parse_operator_kind(const std::string& name);
std::string to_string(OperatorKind kind);

struct OperatorNormConfig {
  std::int64_t prime = 2;
  int dim = 2;
  Rational alpha = Rational(1, 2);
  Rational beta = Rational(1, 2);
  std::uint64_t seed = 7;
  int trials = 100;
  int oracle_every = 10;
  GeneratorSpec functions{};
};

/// Empirical operator norm max ||op f||_{q(.)} / ||f||_{r(.)}, with q from
/// the Sobolev relation (sigma = alpha, or alpha + beta for commutators).
///
/// The operator output is exact on a window two scales above the supports
/// and equals p^{d(alpha-n)} A on the sphere of radius p^d outside it, so
/// the exterior enters the modular as one exact geometric series.
/// Throws ParameterError when the Sobolev relation has no admissible q.
SuiteReport suite_operator_norm(OperatorKind op, const ExponentFunction& r,
                                const OperatorNormConfig& config);

/// One operator-norm trial, exposed for closed-form checks.
struct OperatorTrial {
  StepMap output;
  Magnitude output_norm;
  Magnitude input_norm;
  Magnitude ratio;
  Ball window;
};
OperatorTrial operator_norm_trial(OperatorKind op, const SimpleFunction& b, const SimpleFunction& f,
                                  const ExponentFunction& r, const ExponentFunction& q,
                                  const Rational& alpha);

}  // namespace padic
