#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace gconn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

std::string rational_to_string(const Rational& q);

// Parses "n" or "n/d" with optional sign. Returns nullopt on malformed input
// or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

} // namespace gconn
