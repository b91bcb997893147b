#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qehrhart {

// Exact scalars. Everything in this library is computed over
// arbitrary-precision integers and rationals; there is no floating point
// anywhere, so equality of results is equality of mathematical objects.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// num/den reduced, den > 0. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p" or "p/q" in base 10 and nothing else (decimals are rejected).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);  // "p/q", or "p" when den == 1
std::string to_string(const Integer& n);

Integer floor_int(const Rational& r);
Integer ceil_int(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer binomial(const Integer& n, unsigned long k);

// Exponent may be negative, then base must be nonzero.
Rational pow_rational(const Rational& base, long exp);

long to_long(const Integer& n);  // throws std::overflow_error if out of range

RatVector to_rat_vector(const IntVector& v);

// Safety cap on brute-force box enumerations, read once from the environment
// variable QEHRHART_MAX_BOX (default 10^7 candidate points).
Integer enumeration_box_limit();

}  // namespace qehrhart
