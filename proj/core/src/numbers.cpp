#include <seqopt/numbers.hpp>

#include <stdexcept>
#include <string>

namespace seqopt {

namespace {

const BigCount kZeroCount = 0;

/// n^k under the 0^0 = 0 convention the recurrence needs.
BigCount pow_rec(unsigned base, unsigned k) {
  if (base == 0) return 0;  // covers 0^0 = 0 and 0^k = 0
  return ipow(BigInt(base), k);
}

/// lambda = sum_{i=1..k} C(k,i) H_i(n-1), the factor of the dominating bound.
Rational bound_lambda(unsigned k, unsigned n) {
  Rational lambda = 0;
  for (unsigned i = 1; i <= k; ++i) lambda += Rational(binomial(k, i)) * harmonic(i, n - 1);
  return lambda;
}

/// e * pi^2/6 * (2^k - 1) as a certified bracket.
RatInterval basel_term(unsigned k, unsigned digits) {
  RatInterval e = e_brackets(digits);
  RatInterval p2 = pi_squared_brackets(digits);
  return Rational(ipow(BigInt(2), k) - 1, 6) * (e * p2);
}

}  // namespace

SeqOptTable::SeqOptTable(unsigned k, unsigned n_max, std::vector<std::vector<BigCount>> rows)
    : k_(k), n_max_(n_max), rows_(std::move(rows)) {
  if (rows_.size() != static_cast<std::size_t>(n_max_) + 1)
    throw std::invalid_argument("SeqOptTable: row count does not match n_max");
  for (unsigned n = 0; n <= n_max_; ++n)
    if (rows_[n].size() != static_cast<std::size_t>(n) + 1)
      throw std::invalid_argument("SeqOptTable: row " + std::to_string(n) +
                                  " must have n+1 entries");
}

const BigCount& SeqOptTable::at(unsigned n, unsigned m) const {
  if (n > n_max_) throw std::out_of_range("SeqOptTable::at: n beyond n_max");
  if (m > n) return kZeroCount;
  return rows_[n][m];
}

const std::vector<BigCount>& SeqOptTable::row(unsigned n) const {
  if (n > n_max_) throw std::out_of_range("SeqOptTable::row: n beyond n_max");
  return rows_[n];
}

BigCount SeqOptTable::row_sum(unsigned n) const {
  BigCount s = 0;
  for (const BigCount& v : row(n)) s += v;
  return s;
}

SeqOptTable build_table(unsigned k, unsigned n_max) {
  std::vector<std::vector<BigCount>> rows(n_max + 1);
  rows[0] = {BigCount(1)};
  for (unsigned n = 0; n < n_max; ++n) {
    const BigCount nk = pow_rec(n, k);
    const BigCount step = pow_rec(n + 1, k) - nk;
    std::vector<BigCount>& next = rows[n + 1];
    next.assign(n + 2, BigCount(0));
    for (unsigned m = 0; m <= n; ++m) {
      BigCount v = step * rows[n][m];
      if (m + 1 <= n) v += nk * rows[n][m + 1];
      next[m + 1] = std::move(v);
    }
  }
  return SeqOptTable(k, n_max, std::move(rows));
}

SeqOptTable stirling_table(unsigned n_max) {
  std::vector<std::vector<BigCount>> rows(n_max + 1);
  rows[0] = {BigCount(1)};
  for (unsigned n = 0; n < n_max; ++n) {
    std::vector<BigCount>& next = rows[n + 1];
    next.assign(n + 2, BigCount(0));
    for (unsigned m = 1; m <= n + 1; ++m) {
      BigCount v = rows[n][m - 1];
      if (m <= n) v += BigCount(n) * rows[n][m];
      next[m] = std::move(v);
    }
  }
  return SeqOptTable(1, n_max, std::move(rows));
}

BigCount explicit_value(unsigned k, unsigned n, unsigned m, std::uint64_t term_budget) {
  if (m > n) return 0;
  if (n == 0) return 1;  // m == 0 here
  if (m == 0) return 0;
  const BigCount base = ipow(factorial(n - 1), k);
  if (m == 1) return base;

  const BigCount terms = binomial(n - 1, m - 1);
  if (terms > term_budget)
    throw BudgetExceeded("explicit_value: C(" + std::to_string(n - 1) + "," +
                         std::to_string(m - 1) + ") = " + terms.str() +
                         " combination terms exceed budget " + std::to_string(term_budget));

  // Per-j factor (j^k - (j-1)^k) / (j-1)^k for j in {2..n}.
  std::vector<Rational> factor(n + 1);
  for (unsigned j = 2; j <= n; ++j) {
    const BigInt prev = ipow(BigInt(j - 1), k);
    factor[j] = Rational(ipow(BigInt(j), k) - prev, prev);
  }

  // Lexicographic enumeration of (m-1)-combinations of {2..n}.
  const unsigned r = m - 1;
  std::vector<unsigned> pick(r);
  for (unsigned i = 0; i < r; ++i) pick[i] = 2 + i;
  Rational sum = 0;
  for (;;) {
    Rational prod = 1;
    for (unsigned j : pick) prod *= factor[j];
    sum += prod;
    // advance
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && pick[i] == n - (r - 1 - static_cast<unsigned>(i))) --i;
    if (i < 0) break;
    ++pick[i];
    for (unsigned t = static_cast<unsigned>(i) + 1; t < r; ++t) pick[t] = pick[t - 1] + 1;
  }

  const Rational value = Rational(base) * sum;
  if (denominator(value) != 1)
    throw std::logic_error("explicit_value: combination sum did not clear to an integer");
  return numerator(value);
}

IntPolynomial rising_poly(unsigned k, unsigned n, bool signed_variant) {
  if (n < 1) throw std::invalid_argument("rising_poly: n must be >= 1");
  IntPolynomial p = IntPolynomial::monomial(1, 1);  // x
  for (unsigned j = 2; j <= n; ++j) {
    const BigInt prev = ipow(BigInt(j - 1), k);
    const BigInt a = ipow(BigInt(j), k) - prev;
    p = p.times_linear(a, signed_variant ? -prev : prev);
  }
  return p;
}

namespace {

/// x^deg * p(1/x): the polynomial whose nonzero roots are the reciprocals of
/// p's nonzero roots.
IntPolynomial reversed(const IntPolynomial& p) {
  std::vector<BigInt> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPolynomial(std::move(rev));
}

}  // namespace

RootCheckResult root_check(unsigned k, unsigned n) {
  if (n < 2) throw std::invalid_argument("root_check: n must be >= 2");
  RootCheckResult res;
  res.k = k;
  res.n = n;
  const IntPolynomial pu = rising_poly(k, n, false);
  const IntPolynomial ps = rising_poly(k, n, true);

  // The factor for m is [m^k - (m-1)^k] x +- (m-1)^k, so the nonzero roots
  // are (m-1)^k / ((m-1)^k - m^k) (unsigned) and (m-1)^k / (m^k - (m-1)^k)
  // (signed). Their reciprocals are roots of the coefficient-reversed
  // polynomials; both facts are checked exactly.
  res.unsigned_roots.push_back(0);
  res.signed_roots.push_back(0);
  // The two-argument rational constructor requires a positive denominator, so
  // the sign moves to the numerator up front.
  const auto ratio = [](BigInt num, BigInt den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  };
  std::vector<Rational> unsigned_recip, signed_recip;
  for (unsigned m = 2; m <= n; ++m) {
    const BigInt prev = ipow(BigInt(m - 1), k);
    const BigInt cur = ipow(BigInt(m), k);
    res.unsigned_roots.push_back(ratio(prev, prev - cur));
    res.signed_roots.push_back(ratio(prev, cur - prev));
    unsigned_recip.push_back(ratio(prev - cur, prev));
    signed_recip.push_back(ratio(cur - prev, prev));
  }

  res.all_roots_zero = true;
  for (const Rational& r : res.unsigned_roots)
    if (pu.eval(r) != 0) res.all_roots_zero = false;
  for (const Rational& r : res.signed_roots)
    if (ps.eval(r) != 0) res.all_roots_zero = false;

  res.reciprocal_roots_zero = true;
  const IntPolynomial pu_rev = reversed(pu);
  const IntPolynomial ps_rev = reversed(ps);
  for (const Rational& r : unsigned_recip)
    if (pu_rev.eval(r) != 0) res.reciprocal_roots_zero = false;
  for (const Rational& r : signed_recip)
    if (ps_rev.eval(r) != 0) res.reciprocal_roots_zero = false;

  res.sign_rule_holds = true;
  for (unsigned m = 0; m <= n; ++m) {
    const BigInt expect = ((n + m) % 2 == 0) ? pu.coeff(m) : -pu.coeff(m);
    if (ps.coeff(m) != expect) res.sign_rule_holds = false;
  }
  return res;
}

Report RootCheckResult::report() const {
  Report r;
  r.add("check", "poly_roots");
  r.add("k", k);
  r.add("n", n);
  r.add("roots_checked", std::uint64_t(unsigned_roots.size() + signed_roots.size()));
  r.add("all_roots_zero", all_roots_zero);
  r.add("reciprocal_roots_zero_on_reversed", reciprocal_roots_zero);
  r.add("sign_rule_holds", sign_rule_holds);
  return r;
}

Rational harmonic(unsigned order, unsigned n) {
  if (order < 1) throw std::invalid_argument("harmonic: order must be >= 1");
  Rational s = 0;
  for (unsigned j = 1; j <= n; ++j) s += Rational(1, ipow(BigInt(j), order));
  return s;
}

Rational upper_bound(unsigned k, unsigned n, unsigned m) {
  if (k < 1 || n < 2 || m < 1) throw std::invalid_argument("upper_bound: requires k>=1, n>=2, m>=1");
  const Rational lambda = bound_lambda(k, n);
  return Rational(ipow(factorial(n - 1), k), factorial(m - 1)) * rational_pow(lambda, m - 1);
}

ConcentrationParams concentration_params(unsigned k, unsigned n, unsigned m1) {
  if (k < 1 || n < 2 || m1 < 1)
    throw std::invalid_argument("concentration_params: requires k>=1, n>=2, M1>=1");
  ConcentrationParams res;
  res.k = k;
  res.n = n;
  res.m1 = m1;

  const Rational nm1 = n - 1;
  if (k == 1) {
    // One dimension: H_1(n-1) <= ln(n-1) + 1 gives M = ceil(e (ln(n-1) + 1)).
    res.m_threshold = certified_ceil([&](unsigned d) {
                        RatInterval e = e_brackets(d);
                        RatInterval l = ln_brackets(nm1, d);
                        return e * (Rational(1) + l);
                      }) +
                      m1;
  } else {
    res.m_threshold = certified_ceil([&](unsigned d) {
                        RatInterval e = e_brackets(d);
                        RatInterval l = ln_brackets(nm1, d);
                        return Rational(k) * (e * l) + basel_term(k, d);
                      }) +
                      m1;
  }
  // sqrt(e k) ln(n-1) + e pi^2/6 (2^k - 1): computed for visibility only.
  res.m_threshold_body_variant = certified_ceil([&](unsigned d) {
                                   RatInterval ek = Rational(k) * e_brackets(d);
                                   RatInterval root = sqrt_interval(ek, d);
                                   RatInterval l = ln_brackets(nm1, d);
                                   return root * l + basel_term(k, d);
                                 }) +
                                 m1;
  return res;
}

Report ConcentrationParams::report() const {
  Report r;
  r.add("check", "concentration_threshold");
  r.add("k", k);
  r.add("n", n);
  r.add("m1", m1);
  r.add("m_threshold", m_threshold);
  r.add("m_threshold_body_variant", m_threshold_body_variant);
  return r;
}

Rational tail_probability(const SeqOptTable& table, unsigned n, const BigInt& m_threshold) {
  if (n > table.max_size()) throw std::invalid_argument("tail_probability: n beyond table");
  if (m_threshold < 0) throw std::invalid_argument("tail_probability: threshold must be >= 0");
  if (m_threshold >= n) return 0;
  const unsigned start = m_threshold.convert_to<unsigned>() + 1;
  BigCount tail = 0;
  for (unsigned m = start; m <= n; ++m) tail += table.at(n, m);
  return Rational(tail, ipow(factorial(n), table.dimension()));
}

TailBoundResult tail_bound_check(const SeqOptTable& table, unsigned n, unsigned m1) {
  const unsigned k = table.dimension();
  TailBoundResult res;
  res.k = k;
  res.n = n;
  res.m1 = m1;
  res.m_threshold = concentration_params(k, n, m1).m_threshold;
  res.tail = tail_probability(table, n, res.m_threshold);
  res.bound = exp_brackets(-static_cast<int>(m1), 35);
  res.verified = res.tail <= res.bound.lo;
  return res;
}

TailBoundResult tail_bound_check(unsigned k, unsigned n, unsigned m1) {
  return tail_bound_check(build_table(k, n), n, m1);
}

Report TailBoundResult::report() const {
  Report r;
  r.add("check", "tail_bound");
  r.add("k", k);
  r.add("n", n);
  r.add("m1", m1);
  r.add("m_threshold", m_threshold);
  r.add("tail_exact", tail);
  r.add("tail_approx", approx(tail));
  r.add("bound_lower_bracket", bound.lo);
  r.add("bound_approx", approx(bound.lo));
  r.add("verified", verified);
  return r;
}

RatioBoundResult ratio_bound_check(unsigned k, unsigned n) {
  if (k < 1 || n < 2) throw std::invalid_argument("ratio_bound_check: requires k>=1, n>=2");
  RatioBoundResult res;
  res.k = k;
  res.n = n;

  Rational sum_max = 0;
  for (unsigned m = 1; m <= n; ++m) sum_max += upper_bound(k, n, m);
  res.lhs = sum_max / Rational(ipow(factorial(n), k));

  // Brackets tighten until the comparison is decided either way; the exact
  // lhs can sit within 10^-(n log n) of the bound, so the precision is
  // adaptive with the same cap as certified_ceil.
  constexpr unsigned kMaxDigits = 560;
  const Rational shrink = rational_pow(Rational(n - 1, n), k);
  const BigInt two_k_less_1 = ipow(BigInt(2), k) - 1;
  for (unsigned digits = 35;; digits *= 2) {
    res.rhs = shrink * exp_interval(Rational(1, 6) * (Rational(two_k_less_1) *
                                                      pi_squared_brackets(digits)),
                                    digits);
    res.verified = res.lhs <= res.rhs.lo;
    if (res.verified || res.lhs > res.rhs.hi || digits >= kMaxDigits) break;
  }

  if (k == 1) {
    res.has_k1_chain = true;
    // (n-1)/n * e^{H_1(n-1) - ln(n-1)} <= e, and lhs <= that middle term.
    const Rational h1 = harmonic(1, n - 1);
    for (unsigned digits = 35;; digits *= 2) {
      const RatInterval expo = h1 - ln_brackets(n - 1, digits);
      res.k1_mid = Rational(n - 1, n) * exp_interval(expo, digits);
      const RatInterval e = e_brackets(digits);
      res.k1_verified = res.lhs <= res.k1_mid.lo && res.k1_mid.hi <= e.lo;
      if (res.k1_verified || digits >= kMaxDigits) break;
    }
  }
  return res;
}

Report RatioBoundResult::report() const {
  Report r;
  r.add("check", "ratio_bound");
  r.add("k", k);
  r.add("n", n);
  r.add("lhs_exact", lhs);
  r.add("lhs_approx", approx(lhs));
  r.add("rhs_lower_bracket", rhs.lo);
  r.add("rhs_approx", approx(rhs.lo));
  r.add("verified", verified);
  if (has_k1_chain) {
    r.add("k1_mid_lower_bracket", k1_mid.lo);
    r.add("k1_mid_approx", approx(k1_mid.lo));
    r.add("k1_chain_verified", k1_verified);
  }
  return r;
}

SuccessiveRatioResult successive_ratio_check(unsigned k, unsigned n) {
  if (k < 1 || n < 2)
    throw std::invalid_argument("successive_ratio_check: requires k>=1, n>=2");
  SuccessiveRatioResult res;
  res.k = k;
  res.n = n;
  // P_kmax(n, m+1)/P_kmax(n, m) = lambda/m; decreasing in m, so the claim
  // for all m >= m_start follows from the first m. The threshold here is the
  // general form with no slack term.
  res.m_start = certified_ceil([&](unsigned d) {
    RatInterval e = e_brackets(d);
    RatInterval l = ln_brackets(Rational(n - 1), d);
    return Rational(k) * (e * l) + basel_term(k, d);
  });
  if (res.m_start < 1) res.m_start = 1;
  const Rational lambda = bound_lambda(k, n);
  res.ratio_at_start = lambda / Rational(res.m_start);
  const RatInterval inv_e = e_brackets(35).reciprocal();
  res.verified = res.ratio_at_start <= inv_e.lo;
  return res;
}

Report SuccessiveRatioResult::report() const {
  Report r;
  r.add("check", "successive_ratio");
  r.add("k", k);
  r.add("n", n);
  r.add("m_start", m_start);
  r.add("ratio_at_start", ratio_at_start);
  r.add("ratio_approx", approx(ratio_at_start));
  r.add("verified", verified);
  return r;
}

TiltedTailResult tilted_tail_check(unsigned eta, const Rational& mu, unsigned m1r) {
  if (eta < 2) throw std::invalid_argument("tilted_tail_check: eta must be >= 2");
  if (mu <= 1) throw std::invalid_argument("tilted_tail_check: mu must be > 1");
  if (m1r < 1) throw std::invalid_argument("tilted_tail_check: M1r must be >= 1");

  TiltedTailResult res;
  res.eta = eta;
  res.mu = mu;
  res.m1r = m1r;

  const SeqOptTable table = build_table(1, eta);
  const BigCount total = factorial(eta);

  // Unnormalized tilted weights q_m = P_1(eta, m) mu^m; f = 1/sum.
  std::vector<Rational> q(eta + 1);
  Rational z = 0;
  for (unsigned m = 1; m <= eta; ++m) {
    q[m] = Rational(table.at(eta, m), total) * rational_pow(mu, m);
    z += q[m];
  }
  res.normalizer = 1 / z;
  res.normalizer_le_one = res.normalizer <= 1;

  res.m_threshold = certified_ceil([&](unsigned d) {
                      RatInterval e = e_brackets(d);
                      RatInterval l = ln_brackets(Rational(eta - 1), d);
                      return mu * (e * (Rational(1) + l));
                    }) +
                    m1r;

  Rational tail = 0;
  if (res.m_threshold < eta) {
    for (unsigned m = res.m_threshold.convert_to<unsigned>() + 1; m <= eta; ++m) tail += q[m];
  }
  res.tail = tail * res.normalizer;
  res.bound = exp_brackets(-static_cast<int>(m1r), 35);
  res.verified = res.tail <= res.bound.lo;
  return res;
}

Report TiltedTailResult::report() const {
  Report r;
  r.add("check", "tilted_tail");
  r.add("eta", eta);
  r.add("mu", mu);
  r.add("m1r", m1r);
  r.add("m_threshold", m_threshold);
  r.add("normalizer", normalizer);
  r.add("normalizer_approx", approx(normalizer));
  r.add("normalizer_le_one", normalizer_le_one);
  r.add("tail_exact", tail);
  r.add("tail_approx", approx(tail));
  r.add("bound_lower_bracket", bound.lo);
  r.add("bound_approx", approx(bound.lo));
  r.add("verified", verified);
  return r;
}

}  // namespace seqopt
