#pragma once

#include <gmpxx.h>

#include <string>

namespace srkit {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (coprime, positive denominator) through every operation, which is exactly
// the representation contract the rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "num/den" or "num" (decimal, optional sign). Throws UsageError on
// malformed input or zero denominator. Result is canonical.
Rational rational_from_string(const std::string& s);

// Canonical text form "num/den", denominator always written ("3" -> "3/1").
std::string rational_to_string(const Rational& q);

// q^e for integer e (negative allowed; q must be nonzero then).
Rational pow_rational(const Rational& q, long e);

Integer pow_integer(const Integer& base, unsigned long e);

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace srkit
