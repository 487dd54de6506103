#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/exponents.hpp"
#include "padic/operators.hpp"

namespace padic {

// ---------------------------------------------------------------------------
// Luxemburg machinery

/// One term weight * (|value| / eta)^exponent of a modular.
struct ModularTerm {
  Magnitude value;
  Magnitude weight;
  Rational exponent;
};

/// Terms of the modular of f under q(.), one per piece of f's cells refined
/// against the exponent cells.
std::vector<ModularTerm> modular_terms(const SimpleFunction& f, const ExponentFunction& q);
/// Same for a step map (operator output on a window).
std::vector<ModularTerm> modular_terms(const StepMap& g, const ExponentFunction& q);

/// Sum of weight * (|value|/eta)^exponent.
Magnitude modular_at(const std::vector<ModularTerm>& terms, const Magnitude& eta, std::int64_t prime);

/// The eta > 0 with modular(eta) = 1, or 0 when every term vanishes.
///
/// With a single distinct exponent q the root is (sum of weights |v|^q)^{1/q}
/// in closed form. Otherwise the root is bracketed, bisected to relative
/// 1e-14 (at most 200 steps, std::runtime_error past that) and then polished
/// by Newton steps in log(eta) to the working precision.
Magnitude luxemburg_solve(const std::vector<ModularTerm>& terms, std::int64_t prime);

/// (integral of |f|^q)^{1/q}. Throws ParameterError for q < 1.
Magnitude lq_norm(const SimpleFunction& f, const Rational& q);
Magnitude luxemburg_norm(const SimpleFunction& f, const ExponentFunction& q);
/// ||chi_B||_{q(.)}.
Magnitude chi_norm(const Ball& ball, const ExponentFunction& q);

// ---------------------------------------------------------------------------
// Ball families and reports

enum class FamilyKind { ExplicitList, WindowScan, AutoCutoff };

/// A finite stand-in for "all balls".
///
/// WindowScan(window, lo, hi) holds every ball of scale gamma in [lo, hi]
/// meeting the window: its descendants for gamma <= scale(window), its
/// ancestors above. AutoCutoff is resolved against the function under test:
/// the split nodes of the adaptive tree of its support ball (every other ball
/// inside the support sees a constant) plus ancestors of the support, added
/// until a decay bound drops to the running maximum.
struct BallFamily {
  FamilyKind kind = FamilyKind::AutoCutoff;
  std::vector<Ball> balls;
  std::optional<Ball> window;
  std::int64_t gamma_lo = 0;
  std::int64_t gamma_hi = 0;
  int max_ancestors = 200;

  static BallFamily explicit_list(std::vector<Ball> balls);
  static BallFamily window_scan(const Ball& window, std::int64_t lo, std::int64_t hi);
  static BallFamily auto_cutoff(int max_ancestors = 200);

  /// The balls of an ExplicitList or WindowScan family, sorted.
  std::vector<Ball> materialize() const;
  std::string describe() const;
};

struct BallValue {
  Ball ball;
  Magnitude value;
};

struct NormReport {
  std::string quantity;
  Magnitude value;
  std::optional<Ball> witness_ball;
  std::optional<std::pair<PAdicPoint, PAdicPoint>> witness_pair;
  std::string family;
  /// Range of scales examined.
  std::optional<std::int64_t> gamma_lo;
  std::optional<std::int64_t> gamma_hi;
  /// False when an AutoCutoff scan hit its ancestor cap before the decay
  /// bound dropped below the running maximum.
  bool cutoff_certified = true;
  std::vector<BallValue> per_ball;
  std::vector<std::pair<std::string, std::string>> parameters;

  bool exact() const { return value.is_exact(); }
};

// ---------------------------------------------------------------------------
// Lipschitz norms and characterization quantities

/// Exact sup of |f(x)-f(y)| / |x-y|_p^beta, with a witness pair.
NormReport lambda_beta_norm(const SimpleFunction& f, const Rational& beta);

/// Single-ball terms of the quantities below.
Magnitude lip_ball(const SimpleFunction& f, const Rational& beta, const Rational& q, const Ball& ball);
Magnitude fracmax_ball(const SimpleFunction& b, const Rational& alpha, const Rational& beta,
                       const ExponentFunction& q, const Ball& ball);
Magnitude oscillation_ball(const SimpleFunction& b, const Rational& beta, const ExponentFunction& q,
                           const Ball& ball);
Magnitude nonneg_ball(const SimpleFunction& b, const Rational& beta, const Rational& s, const Ball& ball);

/// max over the family of |B|^{-beta/n} (|B|^{-1} int_B |f - f_B|^q)^{1/q}.
NormReport lip_beta_q_quantity(const SimpleFunction& f, const Rational& beta, const Rational& q,
                               const BallFamily& family);
/// max over B of |B|^{-beta/n} ||(b - |B|^{-alpha/n} M_{alpha,B} b) chi_B|| / ||chi_B||.
NormReport quantity_fracmax(const SimpleFunction& b, const Rational& alpha, const Rational& beta,
                            const ExponentFunction& q, const BallFamily& family);
/// max over B of |B|^{-beta/n} ||(b - b_B) chi_B|| / ||chi_B||.
NormReport quantity_oscillation(const SimpleFunction& b, const Rational& beta,
                                const ExponentFunction& q, const BallFamily& family);
/// max over B of |B|^{-beta/n} (|B|^{-1} int_B |b - M_B b|^s)^{1/s}.
NormReport quantity_nonneg_max(const SimpleFunction& b, const Rational& beta, const Rational& s,
                               const BallFamily& family);

struct HolderResult {
  Rational lhs;
  Magnitude rhs;
  Magnitude ratio;  // lhs / rhs, 0 when rhs is 0
};

/// int |fg| against ||f||_{q(.)} ||g||_{q'(.)}.
HolderResult holder_check(const SimpleFunction& f, const SimpleFunction& g, const ExponentFunction& q);

void require_beta(const Rational& beta);

}  // namespace padic
