#pragma once

#include <functional>

#include <seqopt/bigint.hpp>

namespace seqopt {

/**
 * Closed interval of exact rationals, certified to contain the real value it
 * brackets. All constructors of these intervals in this module round outward:
 * the lower endpoint is a true lower bound and the upper endpoint a true
 * upper bound, so any comparison made against the adverse endpoint is sound.
 */
struct RatInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator-() const { return {-hi, -lo}; }
  RatInterval operator*(const RatInterval& o) const;
  /// Interval of 1/x. Requires 0 outside [lo, hi].
  RatInterval reciprocal() const;
};

RatInterval operator+(const Rational& c, const RatInterval& i);
RatInterval operator-(const Rational& c, const RatInterval& i);
RatInterval operator*(const Rational& c, const RatInterval& i);

/// 10^-digits as an exact rational.
Rational precision_target(unsigned digits);

/// exp(x) for rational x, bracket width <= 10^-digits.
RatInterval exp_brackets(const Rational& x, unsigned digits);

/// Natural logarithm of rational x > 0, bracket width <= 10^-digits.
RatInterval ln_brackets(const Rational& x, unsigned digits);

/// pi^2, bracket width <= 10^-digits.
RatInterval pi_squared_brackets(unsigned digits);

/// e = exp(1), bracket width <= 10^-digits.
RatInterval e_brackets(unsigned digits);

/// sqrt(x) for rational x >= 0, bracket width <= 10^-digits.
RatInterval sqrt_brackets(const Rational& x, unsigned digits);

/// exp over an interval argument (monotone extension, outward rounded).
RatInterval exp_interval(const RatInterval& x, unsigned digits);

/// sqrt over an interval argument with lo >= 0.
RatInterval sqrt_interval(const RatInterval& x, unsigned digits);

/**
 * Ceiling of the real number described by `eval`, where eval(digits) returns
 * a bracket of width <= 10^-digits. Tightens the bracket until both endpoints
 * share a ceiling, so the result is certified independent of rounding.
 * Throws std::runtime_error if max_digits is reached while the bracket still
 * straddles an integer (the expression would then sit exactly on one).
 */
BigInt certified_ceil(const std::function<RatInterval(unsigned)>& eval,
                      unsigned digits = 35, unsigned max_digits = 560);

}  // namespace seqopt
