/**
 * @file rational.hpp
 * @brief Exact rational scalars and square-root-free comparison helpers.
 *
 * Every quantity in this library is an exact rational (GMP mpq, always
 * stored reduced with a positive denominator). Quantities of the form
 * sqrt(a*b) are never materialized; membership tests against such values
 * go through squared comparisons (ceil_sqrt, in_sqrt_window).
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schmidt {

using Int = mpz_class;
using Rat = mpq_class; // canonical: gcd(|num|, den) = 1, den > 0

/// Build a canonical rational from a numerator/denominator pair.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

/// Parse "p/q" or "n". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

/// Render as "p/q", or "n" when the denominator is 1.
std::string rat_str(const Rat& x);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

/// Exact integer power; e may be negative (base != 0 then).
Rat pow_rat(const Rat& base, long e);

/// Least positive integer n with n^2 >= r. Requires r > 0.
Int ceil_sqrt(const Rat& r);

/// True iff lo <= q^2 < hi. Requires 0 < lo < hi and q >= 1.
bool in_sqrt_window(const Int& q, const Rat& lo, const Rat& hi);

/// Largest integer n >= 0 with n^k <= r. Requires r >= 0, k >= 1.
Int root_floor(const Rat& r, unsigned long k);

} // namespace schmidt
