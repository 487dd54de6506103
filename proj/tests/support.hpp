#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "padic/rational.hpp"
#include "padic/core.hpp"
#include "padic/simple_function.hpp"

namespace testing_support {

inline padic::Rational Q(const char* s) { return padic::parse_rational(s); }

inline padic::PAdicPoint pt(std::int64_t p, std::initializer_list<const char*> coords) {
  std::vector<padic::Rational> c;
  for (const char* s : coords) c.push_back(Q(s));
  return padic::PAdicPoint(p, std::move(c));
}

inline padic::Ball ball(std::int64_t p, std::initializer_list<const char*> coords, std::int64_t gamma) {
  return padic::Ball(pt(p, coords), gamma);
}

}  // namespace testing_support
