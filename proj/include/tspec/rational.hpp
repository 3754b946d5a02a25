#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace tspec {

// Exact time arithmetic. All delays, valuations and grid steps are rationals;
// the symbolic layer never touches floating point.
using Rational = boost::rational<long long>;

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

// Parses "7", "1.25", "3/2". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

// Prints integers plainly, finite decimals as decimals, the rest as "p/q".
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace tspec
