#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hrr2 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws DomainError when den == 0.
Rational rat(long num, long den = 1);

/// Parses "p/q" or "p" (optional leading '-', decimal digits only).
/// Non-canonical spellings such as "2/4" are accepted and reduced.
Rational parse_rational(std::string_view text);

/// Canonical spelling: "p/q" with q > 1, or "p".
std::string to_string(const Rational& value);

int sign(const Rational& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// n! / (n-k)!
Integer falling_factorial(unsigned n, unsigned k);

}  // namespace hrr2
