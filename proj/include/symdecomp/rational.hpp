#ifndef SYMDECOMP_RATIONAL_HPP
#define SYMDECOMP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symdecomp {

// GMP keeps every mpq result canonical (lowest terms, positive denominator).
// Only values built from raw numerator/denominator pairs need canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading '-'); the result is canonicalized.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational &value);

Integer binomial(unsigned long n, unsigned long k);

inline int sign(const Rational &value)
{
    return sgn(value);
}

} // namespace symdecomp

#endif
