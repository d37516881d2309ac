#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ras {

// Expression templates are off so that auto and ?: behave like plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs_value(a), y = abs_value(b);
  while (y != 0) {
    Integer t = x % y;
    x = y;
    y = t;
  }
  return x;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a / gcd(a, b) * b);
}

// Floor division and nonnegative remainder; the built-in operators truncate.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Integer mod_floor(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace ras
