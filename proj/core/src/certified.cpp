#include <seqopt/certified.hpp>

#include <initializer_list>
#include <stdexcept>

namespace seqopt {

namespace {

void require_ordered(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::logic_error("interval endpoints out of order");
}

/// Largest multiple of 1/scale that is <= x. Coarsening intermediate values
/// onto this grid keeps numerators and denominators at scale size instead of
/// compounding through series terms and repeated squaring.
Rational floor_to(const Rational& x, const BigInt& scale) {
  return Rational(rational_floor(x * scale), scale);
}

/// Smallest multiple of 1/scale that is >= x.
Rational ceil_to(const Rational& x, const BigInt& scale) {
  return Rational(rational_ceil(x * scale), scale);
}

/// Lower bound of exp(y) for rational 0 <= y <= 1/2: Taylor partial sum with
/// every term rounded down onto the grid. Any truncation of the positive
/// series is a valid lower bound; the loop ends when the rounded term hits 0.
Rational exp_series_lower(const Rational& y, const BigInt& scale) {
  Rational sum = 1;
  Rational term = 1;
  for (unsigned i = 1; term != 0; ++i) {
    term = floor_to(term * y / i, scale);
    sum += term;
  }
  return sum;
}

/// Upper bound of exp(y) for rational 0 <= y < 1: partial sum with terms
/// rounded up, closed with the geometric remainder bound term_i * y/(1 - y).
Rational exp_series_upper(const Rational& y, const BigInt& scale, const Rational& target) {
  Rational sum = 1;
  Rational term = 1;
  const Rational geom = y / (1 - y);
  for (unsigned i = 1;; ++i) {
    term = ceil_to(term * y / i, scale);
    sum += term;
    const Rational rem = ceil_to(term * geom, scale);
    if (rem <= target) return sum + rem;
  }
}

/// atanh(t) for rational 0 <= t < 1: odd-power partial sum plus the tail
/// bound t^(2N+3) / ((2N+3)(1 - t^2)).
RatInterval atanh_brackets(const Rational& t, const Rational& target) {
  if (t == 0) return {0, 0};
  const Rational t2 = t * t;
  Rational sum = 0;
  Rational pw = t;  // t^(2n+1)
  for (unsigned n = 0;; ++n) {
    sum += pw / (2 * n + 1);
    pw *= t2;
    Rational rem = pw / ((2 * n + 3) * (1 - t2));
    if (rem <= target) return {sum, sum + rem};
  }
}

/// ln 2 = 2 atanh(1/3).
RatInterval ln2_brackets(const Rational& target) {
  RatInterval a = atanh_brackets(Rational(1, 3), target / 2);
  return {2 * a.lo, 2 * a.hi};
}

/// atan(1/inv) by the alternating series; the limit lies between any two
/// consecutive partial sums.
RatInterval atan_reciprocal_brackets(unsigned inv, const Rational& target) {
  const Rational u(1, inv);
  const Rational u2 = u * u;
  Rational sum = 0;
  Rational pw = u;  // u^(2n+1)
  for (unsigned n = 0;; ++n) {
    Rational term = pw / (2 * n + 1);
    if (term <= target) {
      // Next signed term is (-1)^n * term; the limit sits between sum and
      // sum + that term.
      if (n % 2 == 0) return {sum, sum + term};
      return {sum - term, sum};
    }
    sum += (n % 2 == 0) ? term : -term;
    pw *= u2;
  }
}

}  // namespace

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  Rational mn = std::min(std::min(a, b), std::min(c, d));
  Rational mx = std::max(std::max(a, b), std::max(c, d));
  return {mn, mx};
}

RatInterval RatInterval::reciprocal() const {
  if (lo <= 0 && hi >= 0) throw std::domain_error("reciprocal of interval containing zero");
  return {1 / hi, 1 / lo};
}

RatInterval operator+(const Rational& c, const RatInterval& i) { return {c + i.lo, c + i.hi}; }

RatInterval operator-(const Rational& c, const RatInterval& i) { return {c - i.hi, c - i.lo}; }

RatInterval operator*(const Rational& c, const RatInterval& i) {
  if (c >= 0) return {c * i.lo, c * i.hi};
  return {c * i.hi, c * i.lo};
}

Rational precision_target(unsigned digits) { return Rational(1, ipow(BigInt(10), digits)); }

RatInterval exp_brackets(const Rational& x, unsigned digits) {
  const Rational target = precision_target(digits);
  if (x == 0) return {1, 1};
  if (x < 0) {
    // exp(x) = 1 / exp(-x); for -x > 0 both endpoints exceed 1, so inversion
    // does not widen the bracket.
    return exp_brackets(-x, digits).reciprocal();
  }
  // Each squaring multiplies the width by at most lo + hi, so start with a
  // guess and tighten until the final bracket meets the target.
  unsigned d = digits + 8 + static_cast<unsigned>(x.convert_to<double>());
  for (;; d += 16) {
    const BigInt scale = ipow(BigInt(10), d);
    // The argument itself is coarsened first: exp is increasing, so grid
    // endpoints around x keep the bracket true and the arithmetic small.
    Rational yl = floor_to(x, scale);
    Rational yh = ceil_to(x, scale);
    if (yl < 0) yl = 0;
    unsigned halvings = 0;
    while (yh > Rational(1, 2)) {
      yl /= 2;
      yh /= 2;
      ++halvings;
    }
    Rational lo = exp_series_lower(yl, scale);
    Rational hi = exp_series_upper(yh, scale, precision_target(d));
    for (unsigned j = 0; j < halvings; ++j) {
      lo = floor_to(lo * lo, scale);
      hi = ceil_to(hi * hi, scale);
    }
    if (hi - lo <= target) {
      require_ordered(lo, hi);
      return {lo, hi};
    }
  }
}

RatInterval ln_brackets(const Rational& x, unsigned digits) {
  if (x <= 0) throw std::domain_error("ln of nonpositive argument");
  const Rational target = precision_target(digits);
  if (x == 1) return {0, 0};
  if (x < 1) return -ln_brackets(1 / x, digits);
  unsigned halvings = 0;
  Rational y = x;
  while (y >= 2) {
    y /= 2;
    ++halvings;
  }
  // y in [1, 2), t = (y-1)/(y+1) in [0, 1/3); ln x = 2 atanh(t) + halvings*ln 2.
  const Rational piece = target / (2 * halvings + 4);
  RatInterval a = atanh_brackets((y - 1) / (y + 1), piece);
  RatInterval r{2 * a.lo, 2 * a.hi};
  if (halvings > 0) {
    RatInterval l2 = ln2_brackets(piece);
    r = r + Rational(halvings) * l2;
  }
  require_ordered(r.lo, r.hi);
  return r;
}

RatInterval pi_squared_brackets(unsigned digits) {
  const Rational target = precision_target(digits);
  // pi = 16 atan(1/5) - 4 atan(1/239); squaring roughly scales width by 2*pi.
  for (unsigned d = digits + 2;; d += 8) {
    const Rational piece = precision_target(d) / 32;
    RatInterval a5 = atan_reciprocal_brackets(5, piece);
    RatInterval a239 = atan_reciprocal_brackets(239, piece);
    RatInterval pi = Rational(16) * a5 - Rational(4) * a239;
    RatInterval pi2{pi.lo * pi.lo, pi.hi * pi.hi};
    if (pi2.width() <= target) {
      require_ordered(pi2.lo, pi2.hi);
      return pi2;
    }
  }
}

RatInterval e_brackets(unsigned digits) { return exp_brackets(1, digits); }

RatInterval sqrt_brackets(const Rational& x, unsigned digits) {
  if (x < 0) throw std::domain_error("sqrt of negative argument");
  if (x == 0) return {0, 0};
  const BigInt p = numerator(x);
  const BigInt q = denominator(x);
  const BigInt scale = ipow(BigInt(10), digits);
  // sqrt(p/q) = sqrt(p*q)/q; floor-isqrt of the scaled radicand gives a
  // bracket of width 1/(q*scale) <= 10^-digits.
  const BigInt radicand = p * q * scale * scale;
  const BigInt r = boost::multiprecision::sqrt(radicand);
  return {Rational(r, q * scale), Rational(r + 1, q * scale)};
}

RatInterval exp_interval(const RatInterval& x, unsigned digits) {
  return {exp_brackets(x.lo, digits).lo, exp_brackets(x.hi, digits).hi};
}

RatInterval sqrt_interval(const RatInterval& x, unsigned digits) {
  return {sqrt_brackets(x.lo, digits).lo, sqrt_brackets(x.hi, digits).hi};
}

BigInt certified_ceil(const std::function<RatInterval(unsigned)>& eval, unsigned digits,
                      unsigned max_digits) {
  for (unsigned d = digits; d <= max_digits; d *= 2) {
    RatInterval r = eval(d);
    require_ordered(r.lo, r.hi);
    BigInt cl = rational_ceil(r.lo);
    BigInt ch = rational_ceil(r.hi);
    if (cl == ch) return cl;
  }
  throw std::runtime_error("certified_ceil: bracket straddles an integer at max precision");
}

}  // namespace seqopt
