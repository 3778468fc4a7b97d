#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace csc {

// All invariants in this library are exact; Rat is an arbitrary-precision
// rational kept in lowest terms with positive denominator, Int its integer
// counterpart. Backed by Boost.Multiprecision (header-only).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

/// floor(r) as an exact integer (rounds toward minus infinity).
Int rat_floor(const Rat& r);

/// Renders "p/q" in lowest terms, or just "p" for integers.
std::string rat_to_string(const Rat& r);

/// Parses "p", "p/q", with optional sign. Throws ParseError on malformed
/// input or zero denominator.
Rat rat_from_string(const std::string& s);

} // namespace csc
