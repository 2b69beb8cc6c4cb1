#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace hadamono {

/// Exact arithmetic carrier for every geometric predicate in the library.
/// Always reduced, denominator > 0 (boost keeps the normal form).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Builds num/den with sign normalization; throws on zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q", "p" or "-p/q" (whitespace not allowed). Throws ValidationError.
Rational parse_rational(const std::string& text);

/// Formats as "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace hadamono
