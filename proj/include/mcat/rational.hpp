#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mcat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Accepts "p", "p/q", with optional sign; q must be nonzero. Throws Error.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer binomial(int n, int k);  // zero outside 0 <= k <= n
Integer factorial(int n);

}  // namespace mcat
