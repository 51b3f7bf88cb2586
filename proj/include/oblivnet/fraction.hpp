#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace oblivnet {

using Fraction = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer, or a plain decimal such as "0.0625" exactly.
/// Throws std::invalid_argument on anything else.
Fraction parse_fraction(std::string_view text);

double to_double(const Fraction& f);
BigInt floor_of(const Fraction& f);

/// "p/q" (or "p" for integers).
std::string to_string(const Fraction& f);

/// observed <= bound for an integer observation.
inline bool within(std::int64_t observed, const Fraction& bound) {
  return Fraction(observed) <= bound;
}

}  // namespace oblivnet
