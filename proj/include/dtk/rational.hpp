#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dtk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign, decimal digits only) into a
/// canonical rational. Anything else, including decimal points and
/// exponents, is a ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// n/d in canonical form (mpq_class's two-argument constructor does not
/// canonicalize).
inline Rational fraction(long n, long d)
{
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Floor and ceiling of an exact rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Narrowing with a range check; throws DomainError when the value does not
/// fit.
long to_long(const Integer& z);

} // namespace dtk
