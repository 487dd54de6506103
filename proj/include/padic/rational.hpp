#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace padic {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Malformed textual input (rational strings, digit strings, JSON fields).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter outside the range an operation is defined on. The message
/// names the violated condition, e.g. "requires r_+ < n/sigma".
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::int64_t p);

/// Throws ParameterError unless p is a prime.
void require_prime(std::int64_t p);

/// Parses "m", "-m" or "m/n". Throws InputError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

/// Exponent of p in the factorization of n != 0.
std::int64_t valuation(const Integer& n, std::int64_t p);

/// p-adic valuation gamma(x): x = p^gamma * (m/n) with p coprime to m and n.
/// std::nullopt stands for +infinity (x == 0).
std::optional<std::int64_t> valuation(const Rational& x, std::int64_t p);

/// p^e as an exact rational, any sign of e.
Rational power_of(std::int64_t p, std::int64_t e);

Rational pow_int(const Rational& base, std::int64_t e);

/// The p-adic fractional part {y}_p: the unique r in [0,1) with p-power
/// denominator such that y - r is a p-adic integer.
Rational p_fractional_part(const Rational& y, std::int64_t p);

/// Exact v-th root of a non-negative integer, if one exists.
std::optional<Integer> exact_root(const Integer& n, unsigned long v);

std::int64_t floor_to_int64(const Rational& x);
std::int64_t ceil_to_int64(const Rational& x);

inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

/// Smallest k with p^k >= x for x > 0 (ceiling of log_p).
std::int64_t ceil_log(const Rational& x, std::int64_t p);

}  // namespace padic
