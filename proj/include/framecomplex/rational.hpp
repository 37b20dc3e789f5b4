// Exact rational scalars. All arithmetic in the engine is exact; there is no
// floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fcx {

// GMP keeps mpq values canonical (reduced, positive denominator) as long as
// they are built through make_rational / arithmetic, so equality is cheap.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long long num, long long den = 1);

// Accepts "p" or "p/q" with an optional leading sign. Throws ParseError.
Rational rational_from_string(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace fcx
