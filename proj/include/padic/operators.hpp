#pragma once

#include <optional>
#include <vector>

#include "padic/magnitude.hpp"
#include "padic/simple_function.hpp"

namespace padic {

/// A locally constant map with Magnitude values on disjoint balls; the
/// representation of operator outputs over a window.
struct StepCell {
  Ball ball;
  Magnitude value;
};

struct StepMap {
  std::vector<StepCell> cells;

  /// Value of the cell containing x; zero outside every cell.
  Magnitude evaluate(const PAdicPoint& x) const;
};

/// Throws ParameterError unless 0 <= alpha < n.
void require_alpha(const Rational& alpha, int dim);

/// Outcome of a scan over radius exponents.
struct ScanResult {
  Magnitude value;
  /// Radius exponent of the maximizing ball; empty when the value is 0.
  std::optional<std::int64_t> gamma;
  std::int64_t gamma_lo = 0;
  std::int64_t gamma_hi = 0;
};

/// sup over gamma of p^{gamma(alpha-n)} * integral of |f| over B_gamma(x).
///
/// The scan covers [lo, hi]: below the resolution scale the terms equal
/// p^{gamma alpha}|f(x)| and grow with gamma, and once B_gamma(x) contains
/// the support the integral is frozen and the terms decay. extra_scales
/// widens the scan on both ends.
ScanResult maximal_scan(const SimpleFunction& f, const PAdicPoint& x, const Rational& alpha,
                        int extra_scales = 0);

Magnitude maximal_at(const SimpleFunction& f, const PAdicPoint& x, const Rational& alpha);

/// M_alpha f on the window, one value per leaf of the adaptive partition of
/// the window against f's cells.
StepMap maximal_fn(const SimpleFunction& f, const Rational& alpha, const Ball& window);

struct RestrictedResult {
  Magnitude value;
  std::optional<std::int64_t> gamma;
  /// Set when x lies outside B*: the supremum is empty and the value is 0.
  bool outside_warning = false;
};

/// sup over balls B_gamma(x) contained in bstar.
RestrictedResult maximal_restricted(const SimpleFunction& f, const Ball& bstar,
                                    const PAdicPoint& x, const Rational& alpha,
                                    int extra_scales = 0);

/// M_{alpha,B*} f on B*, locally constant on the adaptive partition of B*.
StepMap maximal_restricted_fn(const SimpleFunction& f, const Ball& bstar, const Rational& alpha);

/// sup over gamma of p^{gamma(alpha-n)} * int_{B_gamma(x)} |b(x)-b(y)||f(y)| dy.
ScanResult maximal_commutator_scan(const SimpleFunction& b, const SimpleFunction& f,
                                   const PAdicPoint& x, const Rational& alpha,
                                   int extra_scales = 0);

Magnitude maximal_commutator_at(const SimpleFunction& b, const SimpleFunction& f,
                                const PAdicPoint& x, const Rational& alpha);

/// b(x) M_alpha f(x) - M_alpha(b f)(x); may be negative.
Magnitude nonlinear_commutator_at(const SimpleFunction& b, const SimpleFunction& f,
                                  const PAdicPoint& x, const Rational& alpha);

StepMap maximal_commutator_fn(const SimpleFunction& b, const SimpleFunction& f,
                              const Rational& alpha, const Ball& window);
StepMap nonlinear_commutator_fn(const SimpleFunction& b, const SimpleFunction& f,
                                const Rational& alpha, const Ball& window);

}  // namespace padic
