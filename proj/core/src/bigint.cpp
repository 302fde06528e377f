#include <seqopt/bigint.hpp>

#include <algorithm>

namespace seqopt {

BigCount factorial(unsigned n) {
  BigCount r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigCount acc = 1;
  // acc stays integral: after step i it equals C(n, i+1).
  for (unsigned i = 0; i < r; ++i) {
    acc *= n - i;
    acc /= i + 1;
  }
  return acc;
}

BigInt ipow(const BigInt& base, unsigned e) {
  if (e == 0) return 1;
  return boost::multiprecision::pow(base, e);
}

Rational rational_pow(const Rational& x, unsigned e) {
  Rational r = 1;
  Rational b = x;
  while (e > 0) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return r;
}

BigInt rational_floor(const Rational& x) {
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt rational_ceil(const Rational& x) { return -rational_floor(-x); }

}  // namespace seqopt
