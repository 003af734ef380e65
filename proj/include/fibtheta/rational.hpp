#ifndef FIBTHETA_RATIONAL_HPP
#define FIBTHETA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

namespace fibtheta {

// Exact integers and rationals. mpq_class keeps the BigRational invariants
// (lowest terms, denominator > 0) canonical through every operation.
using Int = mpz_class;
using Rat = mpq_class;

/// 10^k for k >= 0.
Int pow10z(unsigned long k);

/// 10^k as a rational, k may be negative.
Rat pow10q(long k);

/// Floor of the integer square root, certified: the result s satisfies
/// s^2 <= n < (s+1)^2, checked with exact arithmetic. Throws DomainError
/// for n < 0.
Int isqrt_floor(const Int& n);

/// Nearest-integer rounding of a rational (ties away from zero).
Int round_nearest(const Int& num, const Int& den);
Int round_nearest(const Rat& x);

/// floor(x) as an integer.
Int floor_rat(const Rat& x);

/// Round x to the dyadic grid of step 2^-k (nearest, ties up).
/// |result - x| <= 2^-(k+1).
Rat dyadic_round(const Rat& x, long k);

/// Round x to roughly `bits` significant bits, never moving toward zero
/// for positive x (an upper bound). Used to keep radius representations
/// small; result >= x >= 0.
Rat coarse_upper(const Rat& x, int bits = 32);

/// Position of the most significant bit of |x|: smallest e with |x| < 2^e.
/// Returns a very negative value only through the caller guarding x == 0.
long mag_exponent(const Rat& x);

/// Truncate |x| to `digits` decimal places, toward zero; returns the plain
/// decimal string with sign. digits >= 1.
std::string decimal_truncate(const Rat& x, int digits);

/// Short certified decimal bound of a nonnegative rational: "d.dde±EE"
/// with the mantissa rounded up (round_up=true) or down. Exact "0" for 0.
std::string short_decimal_bound(const Rat& x, bool round_up);

} // namespace fibtheta

#endif
