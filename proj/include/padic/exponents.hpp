#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "padic/simple_function.hpp"

namespace padic {

/// P: 1 < q_- <= q_+ < infinity.  P1 relaxes the lower bound to q_- >= 1.
enum class ExponentClass { P, P1 };

/// A piecewise constant variable exponent: the cell values of `base` inside
/// its cells and q_inf everywhere else.
class ExponentFunction {
 public:
  /// Throws ParameterError when a value violates the class bound.
  ExponentFunction(SimpleFunction base, Rational q_inf, ExponentClass cls = ExponentClass::P);

  static ExponentFunction constant(std::int64_t prime, int dim, const Rational& q,
                                   ExponentClass cls = ExponentClass::P);

  std::int64_t prime() const { return base_.prime(); }
  int dim() const { return base_.dim(); }
  const SimpleFunction& base() const { return base_; }
  const std::vector<Cell>& cells() const { return base_.cells(); }
  const Rational& q_inf() const { return q_inf_; }
  ExponentClass exponent_class() const { return cls_; }

  Rational at(const PAdicPoint& x) const;
  bool is_constant() const;

 private:
  SimpleFunction base_;
  Rational q_inf_;
  ExponentClass cls_;
};

struct ExponentBounds {
  Rational q_minus;
  Rational q_plus;
};

/// Exact essential inf and sup, over all of Q_p^n or over one ball.
ExponentBounds q_bounds(const ExponentFunction& q, const std::optional<Ball>& region = std::nullopt);

/// Cellwise q/(q-1). Throws ParameterError when q_- = 1.
ExponentFunction conjugate(const ExponentFunction& q);

/// Cellwise 1/q = 1/r - sigma/n. Throws ParameterError unless sigma > 0 and
/// r_+ < n/sigma; sigma_name labels sigma in the message.
ExponentFunction sobolev_shift(const ExponentFunction& r, const Rational& sigma,
                               std::string_view sigma_name = "sigma");

struct LogHolderConstants {
  /// max over the family of gamma (q_-(B) - q_+(B)), as written.
  Rational c0_literal;
  /// max over the family of |gamma| (q_+(B) - q_-(B)).
  Rational c0_standard;
  /// sup over pairs of |q(x)-q(y)| log_p(p + min(|x|_p, |y|_p)), computed
  /// over all pieces (cells and the exterior).
  Real c_inf;
  /// The same quantity maximized over random point pairs; never above c_inf.
  Real c_inf_sampled;
  int pairs_sampled = 0;
  /// Finite constants imply class B for the piecewise class.
  bool class_b_implied = true;
};

LogHolderConstants log_holder_constants(const ExponentFunction& q, const std::vector<Ball>& family,
                                        int pair_sample, std::uint64_t seed = 1);

}  // namespace padic
