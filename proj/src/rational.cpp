#include "padic/rational.hpp"


namespace padic {

namespace mp = boost::multiprecision;

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw ParameterError("prime must be a prime number >= 2, got " + std::to_string(p));
  }
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw InputError("empty rational string");
  auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(t, text));
  }
  Integer num = parse_integer(trim(t.substr(0, slash)), text);
  Integer den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

std::int64_t valuation(const Integer& n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of integer zero");
  Integer m = mp::abs(n);
  Integer prime(p);
  std::int64_t count = 0;
  // Uses mpz_remove, which strips all factors of p at once.
  Integer rest;
  count = static_cast<std::int64_t>(
      mpz_remove(rest.backend().data(), m.backend().data(), prime.backend().data()));
  return count;
}

std::optional<std::int64_t> valuation(const Rational& x, std::int64_t p) {
  if (x == 0) return std::nullopt;
  return valuation(mp::numerator(x), p) - valuation(mp::denominator(x), p);
}

Rational power_of(std::int64_t p, std::int64_t e) {
  Integer base(p);
  Integer mag = mp::pow(base, static_cast<unsigned>(e < 0 ? -e : e));
  if (e >= 0) return Rational(mag);
  return Rational(Integer(1), mag);
}

Rational pow_int(const Rational& base, std::int64_t e) {
  if (e == 0) return Rational(1);
  auto k = static_cast<unsigned>(e < 0 ? -e : e);
  Integer num = mp::pow(mp::numerator(base), k);
  Integer den = mp::pow(mp::denominator(base), k);
  if (e > 0) return Rational(num, den);
  if (num == 0) throw std::domain_error("zero to a negative power");
  return Rational(den, num);
}

Rational p_fractional_part(const Rational& y, std::int64_t p) {
  Integer den = mp::denominator(y);
  if (den == 1) return Rational(0);
  Integer prime(p);
  Integer coprime;
  auto e = mpz_remove(coprime.backend().data(), den.backend().data(), prime.backend().data());
  if (e == 0) return Rational(0);
  Integer modulus = mp::pow(prime, static_cast<unsigned>(e));
  Integer inv;
  mpz_invert(inv.backend().data(), coprime.backend().data(), modulus.backend().data());
  Integer t = (mp::numerator(y) * inv) % modulus;
  if (t < 0) t += modulus;
  return Rational(t, modulus);
}

std::optional<Integer> exact_root(const Integer& n, unsigned long v) {
  if (n < 0) return std::nullopt;
  if (v == 1) return n;
  Integer r;
  int exact = mpz_root(r.backend().data(), n.backend().data(), v);
  if (exact == 0) return std::nullopt;
  return r;
}

std::int64_t floor_to_int64(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.backend().data(), mp::numerator(x).backend().data(),
             mp::denominator(x).backend().data());
  return q.convert_to<std::int64_t>();
}

std::int64_t ceil_to_int64(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.backend().data(), mp::numerator(x).backend().data(),
             mp::denominator(x).backend().data());
  return q.convert_to<std::int64_t>();
}

std::int64_t ceil_log(const Rational& x, std::int64_t p) {
  if (x <= 0) throw std::domain_error("ceil_log of non-positive value");
  std::int64_t k = 0;
  Rational pk(1);
  while (pk < x) {
    pk *= p;
    ++k;
  }
  while (pk / p >= x) {
    pk /= p;
    --k;
  }
  return k;
}

}  // namespace padic
