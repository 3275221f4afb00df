#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/rational.hpp>

namespace g2kit {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }
inline std::int64_t ceil(const Rational& r) { return -floor_div(-r.numerator(), r.denominator()); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

inline std::int64_t lcm_den(std::int64_t m, const Rational& r) { return std::lcm(m, r.denominator()); }

}  // namespace g2kit
