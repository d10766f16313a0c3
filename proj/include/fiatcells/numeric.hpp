#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fiatcells {

/// Arbitrary-precision integer used for every multiplicity and polynomial coefficient.
using Integer = mpz_class;
/// Exact rational used by the bimodule linear algebra.
using Rational = mpq_class;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

}  // namespace fiatcells
