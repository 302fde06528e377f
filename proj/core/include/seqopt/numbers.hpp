#pragma once

#include <cstdint>
#include <vector>

#include <seqopt/bigint.hpp>
#include <seqopt/certified.hpp>
#include <seqopt/errors.hpp>
#include <seqopt/poly.hpp>
#include <seqopt/report.hpp>

namespace seqopt {

/**
 * Triangle of k-dimensional sequential optimization numbers O_k(n, m) for
 * 0 <= m <= n <= max_size(). Row n holds the n+1 entries m = 0..n; entries
 * with m > n are zero by definition and at() reports them as such.
 *
 * O_k(n, m) counts k-tuples of permutations of {1..n} whose union of
 * per-dimension sequential-minimum positions has size exactly m. For k = 1
 * these are the unsigned Stirling numbers of the first kind.
 */
class SeqOptTable {
 public:
  SeqOptTable(unsigned k, unsigned n_max, std::vector<std::vector<BigCount>> rows);

  unsigned dimension() const { return k_; }
  unsigned max_size() const { return n_max_; }

  /// O_k(n, m); zero for m > n. Requires n <= max_size().
  const BigCount& at(unsigned n, unsigned m) const;
  /// Entries m = 0..n of row n.
  const std::vector<BigCount>& row(unsigned n) const;
  /// Sum of row n over m = 0..n.
  BigCount row_sum(unsigned n) const;

 private:
  unsigned k_;
  unsigned n_max_;
  std::vector<std::vector<BigCount>> rows_;
};

/// Default term budget for the combination-sum formula in explicit_value().
inline constexpr std::uint64_t kDefaultComboBudget = 10'000'000;

/// Build the triangle up to row n_max by the two-term recurrence
///   O_k(n+1, m+1) = n^k * O_k(n, m+1) + ((n+1)^k - n^k) * O_k(n, m),
/// seeded with O_k(0, 0) = 1 and the convention 0^0 = 0 (which makes the
/// recurrence valid for k = 0 as well).
SeqOptTable build_table(unsigned k, unsigned n_max);

/// Unsigned Stirling numbers of the first kind via their classical recurrence
///   s(n+1, m) = s(n, m-1) + n * s(n, m),
/// as an independent cross-check of build_table(1, n_max).
SeqOptTable stirling_table(unsigned n_max);

/**
 * O_k(n, m) by the closed combination sum
 *   (n-1)!^k * sum over (m-1)-subsets {j_1..j_{m-1}} of {2..n}
 *              of prod (j^k - (j-1)^k) / (j-1)^k.
 * Enumerates C(n-1, m-1) combinations honestly; throws BudgetExceeded when
 * that count exceeds term_budget. The rational sum always clears to an
 * integer; that is asserted, not assumed.
 */
BigCount explicit_value(unsigned k, unsigned n, unsigned m,
                        std::uint64_t term_budget = kDefaultComboBudget);

/**
 * The degree-n generating polynomial of row n:
 *   unsigned variant  x * prod_{j=2..n} ((j^k - (j-1)^k) x + (j-1)^k),
 *   signed variant    x * prod_{j=2..n} ((j^k - (j-1)^k) x - (j-1)^k).
 * Coefficient of x^m in the unsigned variant is O_k(n, m); the signed variant
 * carries the alternating signs (-1)^(n+m). Requires n >= 1.
 */
IntPolynomial rising_poly(unsigned k, unsigned n, bool signed_variant = false);

/// Exact root evaluation of both polynomial variants for one (k, n).
struct RootCheckResult {
  unsigned k = 0;
  unsigned n = 0;
  /// The products' zero sets: 0 and (m-1)^k/((m-1)^k - m^k) for the unsigned
  /// variant, 0 and (m-1)^k/(m^k - (m-1)^k) for the signed one, m = 2..n.
  std::vector<Rational> unsigned_roots;
  std::vector<Rational> signed_roots;
  bool all_roots_zero = false;
  /// The reciprocals of the nonzero roots, ((m-1)^k - m^k)/(m-1)^k et al.,
  /// are roots of the coefficient-reversed polynomials; checked exactly.
  bool reciprocal_roots_zero = false;
  /// (-1)^(n+m) * signed coefficient == unsigned coefficient for all m.
  bool sign_rule_holds = false;
  Report report() const;
};
RootCheckResult root_check(unsigned k, unsigned n);

/// Generalized harmonic number H_order(n) = sum_{j=1..n} 1/j^order, exact.
Rational harmonic(unsigned order, unsigned n);

/// Dominating bound O_kmax(n, m) = (n-1)!^k / (m-1)! * lambda^(m-1) with
/// lambda = sum_{i=1..k} C(k, i) * H_i(n-1). Exact rational.
/// Requires k >= 1, n >= 2, 1 <= m.
Rational upper_bound(unsigned k, unsigned n, unsigned m);

/**
 * Concentration threshold for the tail of the normalized distribution
 * P_k(n, m) = O_k(n, m)/n!^k. For k >= 2,
 *   M = ceil(e*k*ln(n-1) + e*pi^2/6*(2^k - 1)) + M1;
 * for k = 1 the harmonic bound H_1(n-1) <= ln(n-1) + 1 gives the tighter
 *   M = ceil(e*ln(n-1) + e) + M1.
 * Every ceiling is certified by bracket tightening. m_threshold_body_variant
 * is the sqrt(e*k) variant of the same expression, computed for comparison
 * only; it is never the operative threshold.
 */
struct ConcentrationParams {
  unsigned k = 0;
  unsigned n = 0;
  unsigned m1 = 0;
  BigInt m_threshold;
  BigInt m_threshold_body_variant;
  Report report() const;
};
ConcentrationParams concentration_params(unsigned k, unsigned n, unsigned m1);

/// Exact tail mass P_k(n, m > m_threshold) of the table's row n.
/// Requires table.max_size() >= n.
Rational tail_probability(const SeqOptTable& table, unsigned n, const BigInt& m_threshold);

/// Exact tail versus the certified bracket of e^{-M1}.
struct TailBoundResult {
  unsigned k = 0;
  unsigned n = 0;
  unsigned m1 = 0;
  BigInt m_threshold;
  Rational tail;      // exact
  RatInterval bound;  // e^{-M1}
  bool verified = false;  // tail <= bound.lo
  Report report() const;
};
TailBoundResult tail_bound_check(unsigned k, unsigned n, unsigned m1);
TailBoundResult tail_bound_check(const SeqOptTable& table, unsigned n, unsigned m1);

/**
 * Ratio of the summed dominating bound to the true total:
 *   sum_m O_kmax(n, m) / n!^k <= ((n-1)/n)^k * e^{pi^2/6 * (2^k - 1)}.
 * The left side is exact (the denominator is the row total, proved equal to
 * n!^k and checked elsewhere); the right side is a certified bracket. For
 * k = 1 the tighter chain lhs <= (n-1)/n * e^{H_1(n-1) - ln(n-1)} <= e is
 * verified as well.
 */
struct RatioBoundResult {
  unsigned k = 0;
  unsigned n = 0;
  Rational lhs;
  RatInterval rhs;
  bool verified = false;  // lhs <= rhs.lo
  bool has_k1_chain = false;
  RatInterval k1_mid;       // (n-1)/n * e^{H_1(n-1) - ln(n-1)}
  bool k1_verified = false; // lhs <= k1_mid.lo and k1_mid.hi <= e.lo
  Report report() const;
};
RatioBoundResult ratio_bound_check(unsigned k, unsigned n);

/**
 * Successive-ratio property of the dominating bound: the normalized bound
 * P_kmax satisfies P_kmax(n, m+1)/P_kmax(n, m) = lambda/m, which drops to
 * 1/e or below once m >= the general concentration threshold (M1 = 0 form).
 * Since lambda/m decreases in m, checking the first m suffices.
 */
struct SuccessiveRatioResult {
  unsigned k = 0;
  unsigned n = 0;
  BigInt m_start;
  Rational ratio_at_start;  // lambda / m_start
  bool verified = false;
  Report report() const;
};
SuccessiveRatioResult successive_ratio_check(unsigned k, unsigned n);

/**
 * Exponentially tilted one-dimensional tail. The tilted distribution is
 *   p^r(eta, m) = P_1(eta, m) * mu^m * f(eta, mu),  m = 1..eta,
 * with f the exact normalizer. Its tail beyond
 *   M^r = ceil(e*mu*ln(eta-1) + e*mu) + M1r
 * is bounded by e^{-M1r}. Requires eta >= 2, mu > 1, M1r >= 1.
 */
struct TiltedTailResult {
  unsigned eta = 0;
  Rational mu;
  unsigned m1r = 0;
  BigInt m_threshold;      // M^r
  Rational normalizer;     // f(eta, mu)
  bool normalizer_le_one = false;
  Rational tail;           // exact tilted tail mass beyond M^r
  RatInterval bound;       // e^{-M1r}
  bool verified = false;   // tail <= bound.lo
  Report report() const;
};
TiltedTailResult tilted_tail_check(unsigned eta, const Rational& mu, unsigned m1r);

}  // namespace seqopt
