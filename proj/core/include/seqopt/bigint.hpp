#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace seqopt {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision count. Nonnegative by contract everywhere it appears.
using BigCount = BigInt;

/// Exact rational. boost keeps it normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// n! as an exact integer.
BigCount factorial(unsigned n);

/// Binomial coefficient C(n, r); 0 when r > n.
BigCount binomial(unsigned n, unsigned r);

/// base^e with the usual convention 0^0 = 1.
BigInt ipow(const BigInt& base, unsigned e);

/// x^e for exact rationals, e >= 0.
Rational rational_pow(const Rational& x, unsigned e);

/// Largest integer <= x.
BigInt rational_floor(const Rational& x);

/// Smallest integer >= x.
BigInt rational_ceil(const Rational& x);

}  // namespace seqopt
