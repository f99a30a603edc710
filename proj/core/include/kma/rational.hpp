#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kma {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or a finite decimal such as "-1.25" exactly.
Rational parse_rational(std::string_view text);

/// Exact rational value of a finite double (every double is a dyadic rational).
Rational exact_rational(double x);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline int sign(const Rational& q) { return q.sign(); }

std::vector<double> to_double(const std::vector<Rational>& v);

}  // namespace kma
