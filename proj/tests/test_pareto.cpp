// Dominance antichains: the frozen examples, the algebraic laws of insert and
// merge, and an exhaustive minimum-majorization oracle over all subsets for
// small random label sets.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <seqopt/errors.hpp>
#include <seqopt/pareto.hpp>
#include <seqopt/rng.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

using namespace seqopt;

namespace {

Label L(std::vector<std::int64_t> v) { return Label(std::move(v)); }

ParetoFront front_of(std::vector<Label> labels, const RelationVector& rel) {
  return ParetoFront::from_set(std::move(labels), rel);
}

// Smallest cardinality over all subsets A of U such that every u in U is
// covered by some a in A. Exponential; usable up to |U| ~ 12.
std::size_t brute_min_majorization(const std::vector<Label>& u, const RelationVector& rel) {
  const std::size_t n = u.size();
  std::size_t best = n;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool all_covered = true;
    for (std::size_t i = 0; i < n && all_covered; ++i) {
      bool cov = false;
      for (std::size_t j = 0; j < n && !cov; ++j)
        if ((mask >> j) & 1) cov = covers(u[j], u[i], rel);
      all_covered = cov;
    }
    if (all_covered)
      best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

std::vector<Label> random_labels(std::mt19937_64& rng, std::size_t count, unsigned k,
                                 std::int64_t hi) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> v(k);
    for (auto& c : v) c = bounded(rng, 0, hi);
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST_CASE("Label basics") {
  const Label z = Label::zeros(3);
  CHECK(z.arity() == 3);
  CHECK(z[2] == 0);
  CHECK(L({1, 2}).to_string() == "1 2");

  CHECK(L({1, 2}) + L({3, 4}) == L({4, 6}));
  CHECK(L({3, 4}) - L({1, 2}) == L({2, 2}));
  CHECK_THROWS_AS(L({1, 2}) + L({1, 2, 3}), ArityMismatch);
  CHECK_THROWS_AS(L({std::numeric_limits<std::int64_t>::max()}) + L({1}), std::overflow_error);
  CHECK_THROWS_AS(Label(std::vector<std::int64_t>{}), std::invalid_argument);

  CHECK(L({1, 2}) < L({1, 3}));
  CHECK(L({1, 9}) < L({2, 0}));
}

TEST_CASE("RelationVector") {
  CHECK(RelationVector::all_less_eq(2).less_side());
  CHECK(RelationVector::all_less(3).less_side());
  CHECK_FALSE(RelationVector({Rel::LessEq, Rel::Greater}).less_side());
  CHECK(RelationVector({Rel::Less})[0] == Rel::Less);
  CHECK_THROWS_AS(RelationVector(std::vector<Rel>{}), std::invalid_argument);
}

TEST_CASE("dominates and covers") {
  const RelationVector le = RelationVector::all_less_eq(2);
  const RelationVector lt = RelationVector::all_less(2);

  CHECK(dominates(L({1, 2}), L({3, 4}), le));
  CHECK_FALSE(dominates(L({1, 5}), L({3, 4}), le));
  CHECK(dominates(L({2, 2}), L({2, 3}), le));
  CHECK_FALSE(dominates(L({2, 2}), L({2, 3}), lt));

  // Mixed vector: strict on the first component only.
  const RelationVector mixed({Rel::Less, Rel::LessEq});
  CHECK(dominates(L({1, 2}), L({2, 2}), mixed));
  CHECK_FALSE(dominates(L({2, 2}), L({2, 3}), mixed));

  const RelationVector ge({Rel::GreaterEq, Rel::GreaterEq});
  CHECK(dominates(L({3, 3}), L({1, 2}), ge));

  // Equality counts as coverage under a strict relation.
  CHECK(covers(L({2, 2}), L({2, 2}), lt));
  CHECK_FALSE(dominates(L({2, 2}), L({2, 2}), lt));

  CHECK_THROWS_AS(dominates(L({1}), L({1, 2}), le), ArityMismatch);
}

TEST_CASE("from_set frozen examples") {
  const RelationVector le = RelationVector::all_less_eq(2);

  const ParetoFront f = front_of({L({1, 2}), L({2, 1}), L({3, 3})}, le);
  CHECK(f.labels() == std::vector<Label>{L({1, 2}), L({2, 1})});

  CHECK(front_of({L({1, 1}), L({1, 1})}, le).labels() == std::vector<Label>{L({1, 1})});
  CHECK(front_of({}, le).empty());
  CHECK_THROWS_AS(front_of({L({1, 2, 3})}, le), ArityMismatch);
}

TEST_CASE("from_set is canonical, covering, and minimal") {
  std::mt19937_64 rng(0x5EED5u);
  const std::vector<RelationVector> rels = {
      RelationVector::all_less_eq(2), RelationVector::all_less(2),
      RelationVector({Rel::Less, Rel::LessEq}), RelationVector::all_less_eq(3)};
  for (int round = 0; round < 40; ++round) {
    const RelationVector& rel = rels[static_cast<std::size_t>(round) % rels.size()];
    const std::size_t count = 1 + static_cast<std::size_t>(bounded(rng, 0, 9));
    const std::vector<Label> u = random_labels(rng, count, rel.arity(), 6);
    const ParetoFront f = front_of(u, rel);

    // Canonical: strictly ascending lexicographic order.
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f.labels()[i - 1] < f.labels()[i]);
    // Antichain: no member dominates another distinct member.
    for (const Label& a : f.labels())
      for (const Label& b : f.labels())
        if (a != b) CHECK_FALSE(dominates(a, b, rel));
    // Coverage: every input label is covered by some member.
    for (const Label& x : u) CHECK(f.covers_label(x));
    // Minimality against the exhaustive subset search.
    CHECK(f.size() == brute_min_majorization(u, rel));
  }
}

TEST_CASE("insert frozen examples") {
  const RelationVector le = RelationVector::all_less_eq(2);
  const ParetoFront base = front_of({L({2, 3}), L({3, 1})}, le);

  CHECK(base.insert(L({1, 5})).labels() ==
        std::vector<Label>{L({1, 5}), L({2, 3}), L({3, 1})});
  CHECK(base.insert(L({2, 2})).labels() == std::vector<Label>{L({2, 2}), L({3, 1})});

  const ParetoFront unit = front_of({L({1, 1})}, le);
  CHECK(unit.insert(L({1, 1})) == unit);
}

TEST_CASE("insert equals from_set of the union") {
  std::mt19937_64 rng(0xAB1Eu);
  const std::vector<RelationVector> rels = {RelationVector::all_less_eq(2),
                                            RelationVector::all_less(2),
                                            RelationVector::all_less_eq(3)};
  for (int round = 0; round < 60; ++round) {
    const RelationVector& rel = rels[static_cast<std::size_t>(round) % rels.size()];
    std::vector<Label> u = random_labels(rng, 8, rel.arity(), 5);
    const ParetoFront f = front_of(u, rel);
    const Label x = random_labels(rng, 1, rel.arity(), 5)[0];
    u.push_back(x);
    CHECK(f.insert(x) == front_of(u, rel));
  }
}

TEST_CASE("insert-fold is order independent") {
  std::mt19937_64 rng(0xF01Du);
  for (int round = 0; round < 20; ++round) {
    std::vector<Label> u = random_labels(rng, 9, 2, 5);
    const ParetoFront want = front_of(u, RelationVector::all_less_eq(2));
    for (int shuffle = 0; shuffle < 4; ++shuffle) {
      shuffle_portable(u, rng);
      ParetoFront f(RelationVector::all_less_eq(2));
      for (const Label& x : u) f = f.insert(x);
      CHECK(f == want);
    }
  }
}

TEST_CASE("merge algebra") {
  const RelationVector le = RelationVector::all_less_eq(2);
  const ParetoFront empty(le);
  const ParetoFront a = front_of({L({1, 2})}, le);
  const ParetoFront b = front_of({L({2, 1})}, le);

  CHECK(a.merge(b).labels() == std::vector<Label>{L({1, 2}), L({2, 1})});
  CHECK(a.merge(empty) == a);
  CHECK(empty.merge(a) == a);
  CHECK(a.merge(a) == a);

  std::mt19937_64 rng(0x3E6Eu);
  for (int round = 0; round < 20; ++round) {
    const ParetoFront x = front_of(random_labels(rng, 6, 2, 5), le);
    const ParetoFront y = front_of(random_labels(rng, 6, 2, 5), le);
    const ParetoFront z = front_of(random_labels(rng, 6, 2, 5), le);
    CHECK(x.merge(y) == y.merge(x));
    CHECK(x.merge(y).merge(z) == x.merge(y.merge(z)));
    CHECK(x.merge(x) == x);
  }

  const ParetoFront strict(RelationVector::all_less(2));
  CHECK_THROWS_AS(a.merge(strict), std::invalid_argument);
}

TEST_CASE("translate") {
  const RelationVector le = RelationVector::all_less_eq(2);
  const ParetoFront f = front_of({L({1, 2}), L({2, 1})}, le);

  CHECK(f.translate(L({1, 1})).labels() == std::vector<Label>{L({2, 3}), L({3, 2})});
  CHECK(front_of({L({0, 0})}, le).translate(L({3, 7})).labels() ==
        std::vector<Label>{L({3, 7})});
  CHECK(ParetoFront(le).translate(L({5, 5})).empty());

  // Round trip through the negated shift.
  CHECK(f.translate(L({4, 9})).translate(L({-4, -9})) == f);
  CHECK_THROWS_AS(f.translate(L({1, 2, 3})), ArityMismatch);
}

TEST_CASE("covers_label and contains") {
  const RelationVector le = RelationVector::all_less_eq(2);
  const ParetoFront f = front_of({L({1, 5}), L({3, 2})}, le);
  CHECK(f.covers_label(L({4, 2})));
  CHECK(f.covers_label(L({1, 5})));
  CHECK_FALSE(f.covers_label(L({0, 0})));
  CHECK(f.contains(L({3, 2})));
  CHECK_FALSE(f.contains(L({2, 2})));
}

TEST_CASE("serialize emits canonical order") {
  const ParetoFront f =
      front_of({L({3, 1}), L({1, 5})}, RelationVector::all_less_eq(2));
  CHECK(f.serialize() == "1 5\n3 1\n");
  CHECK(ParetoFront(RelationVector::all_less_eq(2)).serialize().empty());
}
