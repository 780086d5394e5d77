#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boyforge {

// All coordinates in the system are exact rationals; no floating point
// arithmetic is used anywhere in the geometric pipeline.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Parses "p", "-p" or "p/q" exactly. Throws std::invalid_argument on
// malformed input or zero denominator.
Rat parse_rat(std::string_view text);

// Formats in lowest terms, "p" when integral, "p/q" otherwise.
std::string format_rat(const Rat& r);

// Decimal expansion: exact when the reduced denominator is 2^a*5^b,
// otherwise rounded to `sig` significant digits.
std::string decimal_string(const Rat& r, int sig = 12);

inline int sgn(const Rat& r) { return r.sign(); }

}  // namespace boyforge
