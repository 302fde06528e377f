// Brute-force enumeration oracles against the recurrence tables: record
// positions, weight histograms over permutation tuples, the colored-boards
// recount, Pareto-minima counting, tail dominance, and ties monotonicity.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <seqopt/enumeration.hpp>
#include <seqopt/errors.hpp>
#include <seqopt/numbers.hpp>
#include <seqopt/rng.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

using namespace seqopt;

namespace {

CountHistogram from_map(unsigned k, unsigned n, const std::map<unsigned, long long>& m) {
  CountHistogram h(k, n);
  for (const auto& [weight, count] : m)
    for (long long i = 0; i < count; ++i) h.bump(weight);
  return h;
}

bool equals_row(const CountHistogram& h, const SeqOptTable& t, unsigned n) {
  for (unsigned m = 0; m <= n; ++m)
    if (h.count(m) != t.at(n, m)) return false;
  return true;
}

}  // namespace

TEST_CASE("record_positions") {
  CHECK(record_positions({2, 1, 3}) == std::vector<int>{1, 2});
  CHECK(record_positions({1, 2, 3}) == std::vector<int>{1});
  CHECK(record_positions({3, 2, 1}) == std::vector<int>{1, 2, 3});
  CHECK(record_positions({1}) == std::vector<int>{1});
  CHECK(record_positions({4, 2, 3, 1}) == std::vector<int>{1, 2, 4});
}

TEST_CASE("seq_opt_weight unions per-column records") {
  PermTuple t;
  t.n = 2;
  t.columns = {{1, 2}, {2, 1}};
  CHECK(seq_opt_weight(t) == 2);

  PermTuple one;
  one.n = 3;
  one.columns = {{2, 1, 3}};
  CHECK(seq_opt_weight(one) == 2);

  PermTuple sorted;
  sorted.n = 4;
  sorted.columns = {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}};
  CHECK(seq_opt_weight(sorted) == 1);
}

TEST_CASE("CountHistogram bookkeeping") {
  CountHistogram h(2, 3);
  h.bump(1);
  h.bump(1);
  h.bump(3);
  CHECK(h.count(1) == 2);
  CHECK(h.count(0) == 0);
  CHECK(h.total() == 3);
  CHECK(h.to_row() == "0\t2\t0\t1");

  CountHistogram other(2, 3);
  other.bump(2);
  h.add(other);
  CHECK(h.count(2) == 1);
  CHECK(h.total() == 4);
}

TEST_CASE("brute_force_seq_opt frozen histograms") {
  CHECK(brute_force_seq_opt(2, 3) == from_map(2, 3, {{1, 4}, {2, 17}, {3, 15}}));
  CHECK(brute_force_seq_opt(3, 3) == from_map(3, 3, {{1, 8}, {2, 75}, {3, 133}}));
  CHECK(brute_force_seq_opt(1, 3) == from_map(1, 3, {{1, 2}, {2, 3}, {3, 1}}));
}

TEST_CASE("brute_force_seq_opt equals the recurrence rows") {
  for (auto [k, n_top] : {std::pair<unsigned, unsigned>{1, 6}, {2, 4}, {3, 3}}) {
    const SeqOptTable t = build_table(k, n_top);
    for (unsigned n = 1; n <= n_top; ++n) {
      const CountHistogram h = brute_force_seq_opt(k, n);
      CHECK(equals_row(h, t, n));
      CHECK(h.total() == ipow(factorial(n), k));
    }
  }
}

TEST_CASE("brute_force_seq_opt is schedule independent") {
  CHECK(brute_force_seq_opt(2, 4, kDefaultEnumBudget, 1) ==
        brute_force_seq_opt(2, 4, kDefaultEnumBudget, 3));
}

TEST_CASE("brute_force_seq_opt enforces its budget") {
  CHECK_THROWS_AS(brute_force_seq_opt(2, 5, 1000), BudgetExceeded);
}

TEST_CASE("color_boards_count recounts the same distribution") {
  CHECK(color_boards_count(2, 3) == brute_force_seq_opt(2, 3));
  CHECK(color_boards_count(1, 2) == from_map(1, 2, {{1, 1}, {2, 1}}));
  const SeqOptTable t2 = build_table(2, 4);
  CHECK(equals_row(color_boards_count(2, 4), t2, 4));
  for (auto [k, n_top] : {std::pair<unsigned, unsigned>{1, 5}, {2, 4}, {3, 3}})
    for (unsigned n = 1; n <= n_top; ++n)
      CHECK(color_boards_count(k, n) == brute_force_seq_opt(k, n));
}

TEST_CASE("record count distribution is the Stirling row") {
  const SeqOptTable s = stirling_table(7);
  for (unsigned n = 1; n <= 7; ++n) {
    CountHistogram h(1, n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      h.bump(static_cast<unsigned>(record_positions(perm).size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(equals_row(h, s, n));
  }
}

TEST_CASE("pareto_minima_count on distinct-coordinate points") {
  CHECK(pareto_minima_count({{1, 1}, {2, 2}, {3, 3}}) == 1);
  CHECK(pareto_minima_count({{1, 3}, {2, 2}, {3, 1}}) == 3);
  CHECK(pareto_minima_count({{1, 1, 2}, {2, 2, 1}, {3, 3, 3}}) == 2);
  CHECK(pareto_minima_count({{5, 9}}) == 1);
}

TEST_CASE("brute_force_opt_numbers frozen histograms") {
  CHECK(brute_force_opt_numbers(2, 4) ==
        from_map(2, 4, {{1, 6}, {2, 11}, {3, 6}, {4, 1}}));
  CHECK(brute_force_opt_numbers(2, 1) == from_map(2, 1, {{1, 1}}));
  CHECK(brute_force_opt_numbers(3, 3).total() == 36);
}

TEST_CASE("o_2 rows equal the Stirling rows") {
  const SeqOptTable s = stirling_table(6);
  for (unsigned n = 1; n <= 6; ++n) {
    const CountHistogram h = brute_force_opt_numbers(2, n);
    CHECK(equals_row(h, s, n));
    CHECK(h.total() == factorial(n));
  }
}

TEST_CASE("tail dominance holds in the normalized reading") {
  // o_2 vs O_1 on n <= 5: the sides coincide, so every row is an equality.
  for (unsigned n = 2; n <= 5; ++n) {
    const TailDominanceResult r = tail_dominance_check(1, n);
    CHECK(r.all_hold_normalized);
    for (const auto& row : r.rows)
      CHECK(row.lhs_normalized == row.rhs_normalized);
  }
  // o_3 vs O_2 on n <= 4.
  for (unsigned n = 2; n <= 4; ++n) CHECK(tail_dominance_check(2, n).all_hold_normalized);

  // Frozen anchor: O_2(3, m >= 2) = 17 + 15 = 32 raw.
  const TailDominanceResult r23 = tail_dominance_check(2, 3);
  REQUIRE(r23.rows.size() == 4);
  CHECK(r23.rows[2].gamma == 2);
  CHECK(r23.rows[2].rhs_raw == 32);
  CHECK(r23.rows[2].holds_normalized);
}

TEST_CASE("ties monotonicity") {
  // Duplicate points collapse to one representative under (<=, <=).
  const TiesMonotonicityResult dup = ties_monotonicity_check({{1, 1}, {1, 1}}, 42);
  CHECK(dup.weight_weak == 1);
  CHECK(dup.all_hold);
  CHECK(dup.strict_weight_min >= 1);
  CHECK(dup.strict_weight_max <= 2);

  // Tied y-coordinates: weak weight 2, every strict break keeps at least 2.
  const TiesMonotonicityResult tied = ties_monotonicity_check({{1, 2}, {2, 2}, {3, 1}}, 7);
  CHECK(tied.weight_weak == 2);
  CHECK(tied.strict_weight_min >= 2);
  CHECK(tied.all_hold);

  // Distinct coordinates: no ties to break, both weights coincide.
  const TiesMonotonicityResult clean = ties_monotonicity_check({{1, 3}, {2, 1}, {3, 2}}, 3);
  CHECK(clean.weight_weak == clean.strict_weight_min);
  CHECK(clean.weight_weak == clean.strict_weight_max);
  CHECK(clean.all_hold);

  CHECK_THROWS_AS(ties_monotonicity_check({{1, 2, 3}}, 0), ArityMismatch);
}

TEST_CASE("ties monotonicity over random tied instances") {
  std::mt19937_64 rng(0xC0FFEEu);
  for (int instance = 0; instance < 25; ++instance) {
    const int count = 2 + static_cast<int>(bounded(rng, 0, 6));
    std::vector<std::vector<int>> pts;
    for (int i = 0; i < count; ++i)
      pts.push_back({static_cast<int>(bounded(rng, 1, 3)), static_cast<int>(bounded(rng, 1, 3))});
    CHECK(ties_monotonicity_check(pts, rng(), 32).all_hold);
  }
}
