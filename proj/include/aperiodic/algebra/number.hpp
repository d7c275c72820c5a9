#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aperiodic::algebra {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or a plain decimal such as "-0.125". Throws DomainError.
Rational parseRational(std::string_view text);

/// Canonical "p/q" form (q >= 1, always present).
std::string formatRational(const Rational& q);

BigInt floorOf(const Rational& q);
BigInt ceilOf(const Rational& q);
/// Nearest integer, ties rounded up.
BigInt nearestInteger(const Rational& q);
Rational absOf(const Rational& q);

/// Decimal rendering rounded to `digits` places after the point.
std::string toDecimal(const Rational& q, int digits);

/// Smallest k with 2^-k <= bound (bound > 0).
unsigned long dyadicExponentBelow(const Rational& bound);

Rational fromDouble(double x);

/// f_n with f_0 = 0, f_1 = 1 and f_{-n} = (-1)^{n+1} f_n.
BigInt fibonacci(long n);

} // namespace aperiodic::algebra
