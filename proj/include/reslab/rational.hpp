#ifndef RESLAB_RATIONAL_HPP
#define RESLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace reslab {

/// Exact arbitrary-precision rational scalar. GMP keeps values canonical
/// (positive denominator, gcd(num, den) = 1) as long as they are built
/// through the helpers below or ordinary arithmetic.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or a bare integer. Throws std::invalid_argument on anything
/// else (decimal notation is deliberately not rational syntax).
Rational parse_rational(const std::string& text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace reslab

#endif
