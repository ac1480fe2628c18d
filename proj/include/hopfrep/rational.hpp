#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>

namespace hopfrep {

// Exact arbitrary-precision rational scalar.  GMP keeps values canonical
// (lowest terms, positive denominator) after every operation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer rat_num(const Rational& q) { return numerator(q); }
inline Integer rat_den(const Rational& q) { return denominator(q); }

// "p" or "p/q"; the canonical form GMP prints is re-parseable verbatim.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

// Exact square root when q is the square of a rational, otherwise nullopt.
std::optional<Rational> rational_sqrt(const Rational& q);

} // namespace hopfrep
