#ifndef TRIDIST_RATIONAL_HPP
#define TRIDIST_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace tridist {

// All coordinates and coefficients in the library are exact rationals.
// mpq_class keeps the canonical invariant (reduced, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;

// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational parse_rational(const std::string& text);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Exact square root if q is the square of a rational; nullopt otherwise.
// q must be >= 0.
std::optional<Rational> rational_sqrt_exact(const Rational& q);

// q^e for small nonnegative exponents.
Rational rat_pow(const Rational& q, unsigned e);

// The unique rational with smallest denominator (smallest numerator among
// those) in the closed interval [lo, hi]. Used to pin down rational roots
// from tight isolating intervals.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace tridist

#endif
