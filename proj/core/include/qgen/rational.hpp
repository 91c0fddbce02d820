#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qgen/errors.hpp"

namespace qgen {

// The universal exact scalar. mpq_class keeps every value canonical:
// lowest terms, denominator > 0. All arithmetic is exact.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical serialization "p/r"; "/r" omitted when the denominator is 1.
std::string to_string(const Rational& r);

// Parses "p" or "p/r" (optional leading '-'). Throws DomainError on
// malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

// base^e with signed integer exponent; negative exponents require base != 0.
Rational rat_pow(const Rational& base, long e);

// Classical binomial coefficient C(n, k); 0 for k < 0 or k > n.
Rational binomial(unsigned long n, long k);

Integer factorial(unsigned long n);

}  // namespace qgen
