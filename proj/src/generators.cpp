#include "padic/generators.hpp"

#include <algorithm>

namespace padic {

namespace mp = boost::multiprecision;

void GeneratorSpec::validate() const {
  require_prime(prime);
  if (dim < 1) throw ParameterError("dim must be >= 1");
  if (gamma_lo > gamma_hi) throw ParameterError("generator needs gamma_lo <= gamma_hi");
  if (cells_min < 0 || cells_min > cells_max) {
    throw ParameterError("generator needs 0 <= cells_min <= cells_max");
  }
  if (value_lo > value_hi) throw ParameterError("generator needs value_lo <= value_hi");
  if (value_denominator < 1) throw ParameterError("value_denominator must be >= 1");
  if (nonneg && value_hi <= 0) throw ParameterError("nonneg generator needs value_hi > 0");
  if (root) {
    require_same_space(prime, dim, root->prime(), root->dim());
    if (root->gamma() < gamma_hi) throw ParameterError("generator root is smaller than gamma_hi");
  }
}

SimpleFunction gen_simple(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  return gen_simple(spec, rng);
}

SimpleFunction gen_simple(const GeneratorSpec& spec, Rng& rng) {
  spec.validate();
  const Ball root = spec.root ? *spec.root : Ball::centered(spec.prime, spec.dim, spec.gamma_hi + 1);
  Rational lo = spec.nonneg ? std::max(spec.value_lo, Rational(0)) : spec.value_lo;
  const auto target = static_cast<std::size_t>(rng.uniform(spec.cells_min, spec.cells_max));
  std::vector<Cell> cells;
  const std::size_t attempts = 50 * target + 10;
  for (std::size_t a = 0; a < attempts && cells.size() < target; ++a) {
    std::int64_t scale = rng.uniform(spec.gamma_lo, std::min(spec.gamma_hi, root.gamma()));
    Ball b = root;
    while (b.gamma() > scale) {
      auto kids = children(b);
      b = kids[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(kids.size()) - 1))];
    }
    bool clash = std::any_of(cells.begin(), cells.end(),
                             [&](const Cell& c) { return intersects(c.ball, b); });
    if (clash) continue;
    Rational v(0);
    for (int tries = 0; tries < 16 && v == 0; ++tries) {
      v = rng.uniform_rational(lo, spec.value_hi, spec.value_denominator);
    }
    if (v == 0) continue;
    cells.push_back(Cell{b, v});
  }
  return SimpleFunction(spec.prime, spec.dim, std::move(cells));
}

ProfileKind parse_profile_kind(const std::string& name) {
  if (name == "radial_beta") return ProfileKind::RadialBeta;
  if (name == "oscillator") return ProfileKind::Oscillator;
  if (name == "indicator") return ProfileKind::Indicator;
  if (name == "staircase") return ProfileKind::Staircase;
  throw InputError("unknown profile kind '" + name + "'");
}

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::RadialBeta:
      return "radial_beta";
    case ProfileKind::Oscillator:
      return "oscillator";
    case ProfileKind::Indicator:
      return "indicator";
    case ProfileKind::Staircase:
      return "staircase";
  }
  return "?";
}

namespace {

// The children of B_k(0) other than B_{k-1}(0): together they tile S_k(0).
std::vector<Ball> sphere_pieces(std::int64_t p, int n, std::int64_t k) {
  std::vector<Ball> out;
  Ball inner = Ball::centered(p, n, k - 1);
  for (auto& c : children(Ball::centered(p, n, k))) {
    if (!(c == inner)) out.push_back(std::move(c));
  }
  return out;
}

Rational grid_power(std::int64_t p, std::int64_t k, const Rational& beta) {
  Real v = Magnitude::power_of_p(p, Rational(k) * beta).to_real();
  Real scaled = mp::round(v * mp::pow(Real(2), 40));
  Integer num;
  mpfr_get_z(num.backend().data(), scaled.backend().data(), MPFR_RNDN);
  return Rational(num, Integer(1) << 40);
}

}  // namespace

SimpleFunction gen_lipschitz_profile(const ProfileSpec& spec) {
  require_prime(spec.prime);
  const std::int64_t p = spec.prime;
  const int n = spec.dim;
  std::vector<Cell> cells;
  switch (spec.kind) {
    case ProfileKind::RadialBeta: {
      if (spec.beta <= 0 || spec.beta >= 1) throw ParameterError("requires 0 < beta < 1");
      if (spec.depth < 1) throw ParameterError("radial profile needs depth >= 1");
      const std::int64_t inner = spec.gamma - spec.depth;
      cells.push_back(Cell{Ball::centered(p, n, inner), grid_power(p, inner, spec.beta)});
      for (std::int64_t k = inner + 1; k <= spec.gamma; ++k) {
        Rational v = grid_power(p, k, spec.beta);
        for (auto& b : sphere_pieces(p, n, k)) cells.push_back(Cell{std::move(b), v});
      }
      break;
    }
    case ProfileKind::Oscillator: {
      if (spec.m < 1) throw ParameterError("oscillator needs m >= 1");
      std::vector<Ball> level{Ball::centered(p, n, 0)};
      for (int k = 0; k < spec.m; ++k) {
        std::vector<Ball> next;
        for (const auto& b : level) {
          for (auto& c : children(b)) next.push_back(std::move(c));
        }
        level = std::move(next);
      }
      for (auto& b : level) {
        // digit m-1 of the canonical first coordinate
        Integer a = mp::numerator(b.center()[0]);
        Integer digit = (a / mp::pow(Integer(p), static_cast<unsigned>(spec.m - 1))) % p;
        if (digit % 2 == 1) cells.push_back(Cell{std::move(b), Rational(1)});
      }
      break;
    }
    case ProfileKind::Indicator:
      cells.push_back(Cell{Ball::centered(p, n, spec.gamma), Rational(1)});
      break;
    case ProfileKind::Staircase:
      if (spec.steps < 1) throw ParameterError("staircase needs steps >= 1");
      for (int k = 1; k <= spec.steps; ++k) {
        for (auto& b : sphere_pieces(p, n, k)) cells.push_back(Cell{std::move(b), Rational(k)});
      }
      break;
  }
  return SimpleFunction(p, n, std::move(cells));
}

}  // namespace padic
