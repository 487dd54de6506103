#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <boost/multiprecision/mpfr.hpp>

#include "padic/rational.hpp"

namespace padic {

using Real = boost::multiprecision::mpfr_float;

namespace precision {

inline constexpr unsigned kDefaultDigits = 50;

/// Sets the working precision (significant decimal digits) for every Real
/// created afterwards on this thread.
void set_digits(unsigned digits);
unsigned digits();

/// Reads PADIC_PRECISION from the environment, falling back to the default.
unsigned digits_from_env();

/// Relative slack used by every inequality check involving inexact values.
inline constexpr double kInequalitySlack = 1e-10;

}  // namespace precision

/// Numeric tower for norm and operator values.
///
/// Exact values are stored as coeff * p^frac with rational coeff and
/// 0 <= frac < 1, so fractional powers of the prime such as |B|^{alpha/n}
/// stay exact under multiplication, division and comparison. Anything else
/// (logarithms, Luxemburg roots, sums of incommensurable powers) falls back
/// to an arbitrary-precision Real tagged with the digits it was computed at.
class Magnitude {
 public:
  Magnitude() : rep_(Exact{Rational(0), Rational(0), 0}) {}
  Magnitude(const Rational& value) : rep_(Exact{value, Rational(0), 0}) {}  // NOLINT
  Magnitude(std::int64_t value) : Magnitude(Rational(value)) {}            // NOLINT

  /// coeff * p^exponent, exact.
  static Magnitude scaled_power(const Rational& coeff, std::int64_t p, const Rational& exponent);
  static Magnitude power_of_p(std::int64_t p, const Rational& exponent) {
    return scaled_power(Rational(1), p, exponent);
  }
  static Magnitude from_real(const Real& value);

  bool is_exact() const { return std::holds_alternative<Exact>(rep_); }
  /// The value as a rational, when it is exact with no fractional p-power.
  std::optional<Rational> as_rational() const;
  Real to_real() const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Magnitude abs() const;

  /// this^t. Exact whenever the result is a rational times a fractional
  /// power of the prime; `prime` supplies it for values that carry no
  /// fractional part. Negative bases are only allowed for integer t.
  Magnitude pow(const Rational& t, std::int64_t prime = 0) const;

  /// Precision tag in significant digits; 0 for exact values.
  unsigned digits() const;

  std::string to_string() const;

  friend Magnitude operator+(const Magnitude& a, const Magnitude& b);
  friend Magnitude operator-(const Magnitude& a, const Magnitude& b);
  friend Magnitude operator*(const Magnitude& a, const Magnitude& b);
  friend Magnitude operator/(const Magnitude& a, const Magnitude& b);
  Magnitude operator-() const;

  /// Exact three-way comparison when both sides are exact; otherwise compared
  /// as Reals at the working precision.
  friend std::strong_ordering operator<=>(const Magnitude& a, const Magnitude& b);
  friend bool operator==(const Magnitude& a, const Magnitude& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// |a - b| <= rel * max(|a|, |b|); exact equality when both are exact.
  friend bool approx_equal(const Magnitude& a, const Magnitude& b, double rel);
  /// a <= b * (1 + slack) for non-negative b (exact comparison if possible).
  friend bool leq_with_slack(const Magnitude& a, const Magnitude& b, double slack);

 private:
  struct Exact {
    Rational coeff;
    Rational frac;      // in [0, 1)
    std::int64_t prime; // 0 when frac == 0
  };
  struct Inexact {
    Real value;
    unsigned digits;
  };

  explicit Magnitude(Exact e) : rep_(std::move(e)) {}
  explicit Magnitude(Inexact r) : rep_(std::move(r)) {}

  static Exact normalize(Rational coeff, std::int64_t p, Rational exponent);

  std::variant<Exact, Inexact> rep_;
};

/// Natural logarithm helper for positive magnitudes, always inexact.
Real log_real(const Magnitude& x);

}  // namespace padic
