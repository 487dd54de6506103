#include "padic/magnitude.hpp"

#include <cstdlib>
#include <sstream>

namespace padic {

namespace mp = boost::multiprecision;

namespace precision {

void set_digits(unsigned digits) {
  if (digits < 10) digits = 10;
  Real::default_precision(digits);
}

unsigned digits() { return Real::default_precision(); }

unsigned digits_from_env() {
  if (const char* env = std::getenv("PADIC_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 10 && v <= 10000) return static_cast<unsigned>(v);
  }
  return kDefaultDigits;
}

namespace {
// mpfr_float starts at 20 digits otherwise
const bool kInitialized = (set_digits(digits_from_env()), true);
}  // namespace

}  // namespace precision

Magnitude::Exact Magnitude::normalize(Rational coeff, std::int64_t p, Rational exponent) {
  if (coeff == 0) return Exact{Rational(0), Rational(0), 0};
  std::int64_t whole = floor_to_int64(exponent);
  Rational frac = exponent - whole;
  if (whole != 0) coeff *= power_of(p, whole);
  if (frac == 0) return Exact{std::move(coeff), Rational(0), 0};
  return Exact{std::move(coeff), std::move(frac), p};
}

Magnitude Magnitude::scaled_power(const Rational& coeff, std::int64_t p, const Rational& exponent) {
  return Magnitude(normalize(coeff, p, exponent));
}

Magnitude Magnitude::from_real(const Real& value) {
  return Magnitude(Inexact{value, precision::digits()});
}

std::optional<Rational> Magnitude::as_rational() const {
  if (const auto* e = std::get_if<Exact>(&rep_)) {
    if (e->frac == 0) return e->coeff;
  }
  return std::nullopt;
}

Real Magnitude::to_real() const {
  if (const auto* e = std::get_if<Exact>(&rep_)) {
    Real c(e->coeff);
    if (e->frac == 0) return c;
    return c * mp::pow(Real(e->prime), Real(e->frac));
  }
  return std::get<Inexact>(rep_).value;
}

double Magnitude::to_double() const { return to_real().convert_to<double>(); }

int Magnitude::sign() const {
  if (const auto* e = std::get_if<Exact>(&rep_)) {
    return e->coeff.sign();
  }
  const Real& v = std::get<Inexact>(rep_).value;
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Magnitude Magnitude::abs() const { return sign() < 0 ? -*this : *this; }

unsigned Magnitude::digits() const {
  if (is_exact()) return 0;
  return std::get<Inexact>(rep_).digits;
}

std::string Magnitude::to_string() const {
  if (const auto* e = std::get_if<Exact>(&rep_)) {
    if (e->frac == 0) return padic::to_string(e->coeff);
    std::string s = padic::to_string(e->coeff) + "*" + std::to_string(e->prime) + "^(" +
                    padic::to_string(e->frac) + ")";
    return s;
  }
  const auto& r = std::get<Inexact>(rep_);
  return r.value.str(static_cast<std::streamsize>(r.digits > 5 ? r.digits - 5 : r.digits));
}

Magnitude Magnitude::operator-() const {
  if (const auto* e = std::get_if<Exact>(&rep_)) {
    return Magnitude(Exact{-e->coeff, e->frac, e->prime});
  }
  const auto& r = std::get<Inexact>(rep_);
  return Magnitude(Inexact{-r.value, r.digits});
}

namespace {

unsigned combined_digits(const Magnitude& a, const Magnitude& b) {
  unsigned da = a.digits();
  unsigned db = b.digits();
  if (da == 0) return db == 0 ? precision::digits() : db;
  if (db == 0) return da;
  return std::min(da, db);
}

}  // namespace

Magnitude operator+(const Magnitude& a, const Magnitude& b) {
  const auto* ea = std::get_if<Magnitude::Exact>(&a.rep_);
  const auto* eb = std::get_if<Magnitude::Exact>(&b.rep_);
  if (ea && eb) {
    if (ea->coeff == 0) return b;
    if (eb->coeff == 0) return a;
    if (ea->frac == eb->frac) {
      return Magnitude(Magnitude::normalize(ea->coeff + eb->coeff, ea->prime, ea->frac));
    }
  }
  if (a.is_zero() && a.is_exact()) return b;
  if (b.is_zero() && b.is_exact()) return a;
  return Magnitude(Magnitude::Inexact{a.to_real() + b.to_real(), combined_digits(a, b)});
}

Magnitude operator-(const Magnitude& a, const Magnitude& b) { return a + (-b); }

Magnitude operator*(const Magnitude& a, const Magnitude& b) {
  const auto* ea = std::get_if<Magnitude::Exact>(&a.rep_);
  const auto* eb = std::get_if<Magnitude::Exact>(&b.rep_);
  if (ea && eb) {
    std::int64_t p = ea->prime != 0 ? ea->prime : eb->prime;
    if (ea->prime != 0 && eb->prime != 0 && ea->prime != eb->prime) {
      throw std::invalid_argument("Magnitude: mixing fractional powers of different primes");
    }
    return Magnitude(Magnitude::normalize(ea->coeff * eb->coeff, p, ea->frac + eb->frac));
  }
  if ((ea && ea->coeff == 0) || (eb && eb->coeff == 0)) return Magnitude();
  return Magnitude(Magnitude::Inexact{a.to_real() * b.to_real(), combined_digits(a, b)});
}

Magnitude operator/(const Magnitude& a, const Magnitude& b) {
  if (b.is_zero()) throw std::domain_error("Magnitude: division by zero");
  const auto* ea = std::get_if<Magnitude::Exact>(&a.rep_);
  const auto* eb = std::get_if<Magnitude::Exact>(&b.rep_);
  if (ea && eb) {
    std::int64_t p = ea->prime != 0 ? ea->prime : eb->prime;
    if (ea->prime != 0 && eb->prime != 0 && ea->prime != eb->prime) {
      throw std::invalid_argument("Magnitude: mixing fractional powers of different primes");
    }
    return Magnitude(Magnitude::normalize(ea->coeff / eb->coeff, p, ea->frac - eb->frac));
  }
  if (ea && ea->coeff == 0) return Magnitude();
  return Magnitude(Magnitude::Inexact{a.to_real() / b.to_real(), combined_digits(a, b)});
}

std::strong_ordering operator<=>(const Magnitude& a, const Magnitude& b) {
  const auto* ea = std::get_if<Magnitude::Exact>(&a.rep_);
  const auto* eb = std::get_if<Magnitude::Exact>(&b.rep_);
  if (ea && eb) {
    if (ea->frac == eb->frac) {
      if (ea->coeff < eb->coeff) return std::strong_ordering::less;
      if (ea->coeff > eb->coeff) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    }
    int sa = ea->coeff.sign();
    int sb = eb->coeff.sign();
    if (sa != sb) return sa <=> sb;
    // Same nonzero sign, different fractional exponents (so the same prime).
    // Compare |ca|/|cb| against p^(fb - fa) by raising both to the denominator.
    std::int64_t p = ea->prime != 0 ? ea->prime : eb->prime;
    Rational d = eb->frac - ea->frac;
    Rational ratio = mp::abs(ea->coeff) / mp::abs(eb->coeff);
    auto v = mp::denominator(d).convert_to<std::int64_t>();
    auto u = mp::numerator(d).convert_to<std::int64_t>();
    Rational lhs = pow_int(ratio, v);
    Rational rhs = power_of(p, u);
    std::strong_ordering mag = lhs < rhs   ? std::strong_ordering::less
                               : lhs > rhs ? std::strong_ordering::greater
                                           : std::strong_ordering::equal;
    if (sa > 0) return mag;
    return 0 <=> mag;
  }
  Real ra = a.to_real();
  Real rb = b.to_real();
  if (ra < rb) return std::strong_ordering::less;
  if (ra > rb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool approx_equal(const Magnitude& a, const Magnitude& b, double rel) {
  if (a.is_exact() && b.is_exact()) return a == b;
  Real ra = a.to_real();
  Real rb = b.to_real();
  Real scale = mp::max(mp::abs(ra), mp::abs(rb));
  if (scale == 0) return true;
  return mp::abs(ra - rb) <= Real(rel) * scale;
}

bool leq_with_slack(const Magnitude& a, const Magnitude& b, double slack) {
  if (a.is_exact() && b.is_exact()) return a <= b;
  Real ra = a.to_real();
  Real rb = b.to_real();
  Real tol = Real(slack) * mp::max(mp::abs(ra), mp::abs(rb));
  return ra <= rb + tol;
}

Magnitude Magnitude::pow(const Rational& t, std::int64_t prime) const {
  if (t == 0) return Magnitude(Rational(1));
  if (const auto* e = std::get_if<Exact>(&rep_)) {
    if (e->coeff == 0) {
      if (t < 0) throw std::domain_error("Magnitude: zero to a negative power");
      return Magnitude();
    }
    if (is_integer(t)) {
      auto k = t.convert_to<std::int64_t>();
      return Magnitude(normalize(pow_int(e->coeff, k), e->prime, e->frac * t));
    }
    if (e->coeff < 0) throw std::domain_error("Magnitude: negative base to a fractional power");
    // coeff = p^k * (a/b) with a, b coprime to p; exact when a and b are
    // perfect v-th powers where t = u/v.
    std::int64_t p = e->prime != 0 ? e->prime : prime;
    auto v = mp::denominator(t).convert_to<unsigned long>();
    auto u = mp::numerator(t).convert_to<std::int64_t>();
    auto try_prime = [&](std::int64_t base_prime) -> std::optional<Magnitude> {
      Integer a = mp::numerator(e->coeff);
      Integer b = mp::denominator(e->coeff);
      std::int64_t k = 0;
      if (base_prime != 0) {
        k = valuation(a, base_prime) - valuation(b, base_prime);
        Integer pr(base_prime);
        mpz_remove(a.backend().data(), a.backend().data(), pr.backend().data());
        mpz_remove(b.backend().data(), b.backend().data(), pr.backend().data());
      }
      auto ra = exact_root(a, v);
      auto rb = exact_root(b, v);
      if (!ra || !rb) return std::nullopt;
      Rational root(*ra, *rb);
      Rational coeff = pow_int(root, u);
      if (base_prime == 0) return Magnitude(normalize(coeff, 0, Rational(0)));
      return Magnitude(normalize(coeff, base_prime, (Rational(k) + e->frac) * t));
    };
    if (auto m = try_prime(p)) return *m;
    Real r = mp::pow(to_real(), Real(t));
    return Magnitude(Inexact{r, precision::digits()});
  }
  const auto& r = std::get<Inexact>(rep_);
  if (r.value < 0 && !is_integer(t)) {
    throw std::domain_error("Magnitude: negative base to a fractional power");
  }
  return Magnitude(Inexact{mp::pow(r.value, Real(t)), r.digits});
}

Real log_real(const Magnitude& x) {
  if (x.sign() <= 0) throw std::domain_error("log of non-positive magnitude");
  return mp::log(x.to_real());
}

}  // namespace padic
