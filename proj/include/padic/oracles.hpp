#pragma once

#include <cstdint>
#include <functional>

#include "padic/magnitude.hpp"
#include "padic/simple_function.hpp"

namespace padic {

// Brute-force references for the fast paths. They share only point
// evaluation and ball membership with the library: integrals are Riemann sums
// over an explicit digit enumeration of sub-balls, and suprema scan a wide
// fixed window of scales.

/// Sum of |g(center)| * measure over the sub-balls of `ball` at scale
/// `scale` (a single term when scale >= gamma(ball)). Throws std::length_error
/// beyond 2^21 sub-balls.
Rational riemann_abs(const std::function<Rational(const PAdicPoint&)>& g, const Ball& ball,
                     std::int64_t scale);
Rational riemann_signed(const std::function<Rational(const PAdicPoint&)>& g, const Ball& ball,
                        std::int64_t scale);

Rational oracle_average(const SimpleFunction& f, const Ball& ball);

/// sup over gamma in [s - margin, top + margin] with s the smallest cell
/// scale and top the first scale at which B_gamma(x) holds every cell.
Magnitude oracle_maximal(const SimpleFunction& f, const PAdicPoint& x, const Rational& alpha,
                         int margin = 2);
Magnitude oracle_maximal_commutator(const SimpleFunction& b, const SimpleFunction& f,
                                    const PAdicPoint& x, const Rational& alpha, int margin = 2);

/// |B|^{-beta/n} (|B|^{-1} int_B |b - b_B|^q)^{1/q} for integer q, by Riemann
/// sums.
Magnitude oracle_oscillation(const SimpleFunction& b, const Rational& beta, std::int64_t q,
                             const Ball& ball);

}  // namespace padic
