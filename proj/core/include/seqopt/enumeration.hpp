#pragma once

#include <cstdint>
#include <vector>

#include <seqopt/errors.hpp>
#include <seqopt/numbers.hpp>
#include <seqopt/pareto.hpp>
#include <seqopt/report.hpp>

namespace seqopt {

/// Permutation of {1..n}, stored 1-based by value: perm[i] is the value at
/// position i+1.
using Perm = std::vector<int>;

/// k columns, each a permutation of {1..n}.
struct PermTuple {
  int n = 0;
  std::vector<Perm> columns;
};

/// 1-based positions of the sequential minima (records) of a permutation:
/// {i : perm(i) < perm(i') for all i' < i}. Position 1 is always a record.
std::vector<int> record_positions(const Perm& perm);

/// Size of the union over columns of record_positions.
int seq_opt_weight(const PermTuple& t);

/// Histogram: counts[m] = number of enumerated ways with weight m, 0 <= m <= n.
class CountHistogram {
 public:
  CountHistogram(unsigned k, unsigned n);

  unsigned dimension() const { return k_; }
  unsigned size() const { return n_; }
  const BigCount& count(unsigned m) const { return counts_.at(m); }
  const std::vector<BigCount>& counts() const { return counts_; }
  BigCount total() const;

  void bump(unsigned m) { counts_.at(m) += 1; }
  void add(const CountHistogram& o);

  /// Entries m = 0..n, tab-separated (same row format as the table export).
  std::string to_row() const;

  bool operator==(const CountHistogram&) const = default;

 private:
  unsigned k_;
  unsigned n_;
  std::vector<BigCount> counts_;
};

/// Default enumeration budget (number of permutation tuples).
inline constexpr std::uint64_t kDefaultEnumBudget = 20'000'000;

/**
 * Exhaustive histogram of seq_opt_weight over all (n!)^k permutation tuples.
 * Columns iterate in lexicographic order; with jobs > 1 the first column's
 * permutations are dealt round-robin to workers and the exact partial
 * histograms are merged, so the result is schedule-independent.
 * Throws BudgetExceeded when (n!)^k > budget.
 */
CountHistogram brute_force_seq_opt(unsigned k, unsigned n,
                                   std::uint64_t budget = kDefaultEnumBudget,
                                   unsigned jobs = 1);

/**
 * The same distribution via the colored-boards picture: enumerate all (n!)^k
 * assignments of per-color height orders and count how many colors stay
 * visible, using the value flip a = n+1-h that swaps "highest board" for
 * "sequential minimum". Must equal brute_force_seq_opt; the enumeration data
 * flow is deliberately different (per-position height matrix, max scan).
 */
CountHistogram color_boards_count(unsigned k, unsigned n,
                                  std::uint64_t budget = kDefaultEnumBudget,
                                  unsigned jobs = 1);

/// Number of minimal elements of the point list under strict componentwise
/// dominance (<,...,<). Intended for inputs with distinct per-dimension
/// coordinates, where this equals the optimization-set weight.
int pareto_minima_count(const std::vector<std::vector<int>>& points);

/**
 * Histogram of pareto_minima_count over the (n!)^(k-1) point sets whose first
 * coordinate column is fixed to the identity and whose remaining k-1 columns
 * range over all permutations: the k-dimensional optimization numbers
 * o_k(n, m). Throws BudgetExceeded when (n!)^(k-1) > budget.
 */
CountHistogram brute_force_opt_numbers(unsigned k, unsigned n,
                                       std::uint64_t budget = kDefaultEnumBudget,
                                       unsigned jobs = 1);

/**
 * Tail comparison o_{k+1}(n, m >= gamma) vs O_k(n, m >= gamma) for every
 * gamma in 0..n. Both the raw-count and the normalized-probability reading
 * are reported (the per-distribution totals are both (n!)^k once the first
 * column is fixed, so the verdicts coincide; both are still computed).
 */
struct TailDominanceResult {
  unsigned k = 0;  // compares o_{k+1} against O_k
  unsigned n = 0;
  struct GammaRow {
    unsigned gamma = 0;
    BigCount lhs_raw;        // sum_{m>=gamma} o_{k+1}(n, m)
    BigCount rhs_raw;        // sum_{m>=gamma} O_k(n, m)
    Rational lhs_normalized;
    Rational rhs_normalized;
    bool holds_raw = false;
    bool holds_normalized = false;
  };
  std::vector<GammaRow> rows;
  bool all_hold_raw = false;
  bool all_hold_normalized = false;
  Report report() const;
};
TailDominanceResult tail_dominance_check(unsigned k, unsigned n,
                                         std::uint64_t budget = kDefaultEnumBudget);

/**
 * Ties monotonicity: for 2-d points with possibly repeated coordinates, the
 * optimization-set weight under (<=, <=) is at most the weight under (<, <)
 * after any tie-consistent strict perturbation. Checked over `trials`
 * seeded random perturbations (stable tie-break orders drawn from the seed).
 */
struct TiesMonotonicityResult {
  std::size_t point_count = 0;
  int weight_weak = 0;        // |front| under (<=, <=)
  unsigned trials = 0;
  int strict_weight_min = 0;  // over the sampled perturbations
  int strict_weight_max = 0;
  bool all_hold = false;      // weight_weak <= every sampled strict weight
  Report report() const;
};
TiesMonotonicityResult ties_monotonicity_check(
    const std::vector<std::vector<int>>& points_with_ties,
    std::uint64_t tiebreak_seed, unsigned trials = 64);

}  // namespace seqopt
