#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <seqopt/errors.hpp>

namespace seqopt {

/// Point in the k-dimensional extended-integer cost space.
class Label {
 public:
  Label() = default;
  explicit Label(std::vector<std::int64_t> components);
  static Label zeros(unsigned arity);

  unsigned arity() const { return static_cast<unsigned>(c_.size()); }
  std::int64_t operator[](unsigned i) const { return c_[i]; }
  const std::vector<std::int64_t>& components() const { return c_; }

  /// Componentwise sum; throws std::overflow_error if any component overflows
  /// and ArityMismatch if arities differ.
  Label operator+(const Label& o) const;
  /// Componentwise difference with the same checks.
  Label operator-(const Label& o) const;

  bool operator==(const Label&) const = default;
  /// Lexicographic order; the canonical order of a front.
  std::strong_ordering operator<=>(const Label& o) const { return c_ <=> o.c_; }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> c_;
};

/// One comparison per component.
enum class Rel { Less, LessEq, Greater, GreaterEq };

/// Componentwise relation vector R = (R_1, ..., R_k).
class RelationVector {
 public:
  explicit RelationVector(std::vector<Rel> rels);
  /// All components <= (the relation used by the path recursion).
  static RelationVector all_less_eq(unsigned arity);
  /// All components <.
  static RelationVector all_less(unsigned arity);

  unsigned arity() const { return static_cast<unsigned>(rels_.size()); }
  Rel operator[](unsigned i) const { return rels_[i]; }
  /// Every component is Less or LessEq.
  bool less_side() const;

  bool operator==(const RelationVector&) const = default;

 private:
  std::vector<Rel> rels_;
};

/// a R b componentwise. Arities of a, b, and r must agree.
bool dominates(const Label& a, const Label& b, const RelationVector& r);

/// a dominates u, or a equals u. Equality counts as coverage regardless of
/// whether the relations are reflexive.
bool covers(const Label& a, const Label& u, const RelationVector& r);

/**
 * Pareto front: the unique minimum-cardinality set A such that every label of
 * the originating set is covered by some member of A. Equivalently, one
 * representative per minimal equivalence class.
 *
 * Canonical form: labels in strictly ascending lexicographic order with no
 * duplicates, and no member dominating another (antichain). Fronts are
 * immutable values; every operation returns a new front.
 *
 * An empty front means nothing is reachable; there is no infinity label.
 */
class ParetoFront {
 public:
  explicit ParetoFront(RelationVector rel);

  /// Minimal covering set of an arbitrary label multiset.
  static ParetoFront from_set(std::vector<Label> labels, const RelationVector& rel);

  const RelationVector& relation() const { return rel_; }
  unsigned arity() const { return rel_.arity(); }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }

  /// Front of labels() + {x}. For two components under (<=, <=) this is a
  /// logarithmic staircase update; otherwise a linear scan.
  ParetoFront insert(const Label& x) const;
  /// Front of the union. Relations must match.
  ParetoFront merge(const ParetoFront& o) const;
  /// Every label shifted by delta (checked addition). Order and antichain
  /// structure are preserved by a constant shift.
  ParetoFront translate(const Label& delta) const;

  /// Some member covers u (dominates or equals).
  bool covers_label(const Label& u) const;
  /// u is literally a member.
  bool contains(const Label& u) const;

  /// One label per line, components space-separated.
  std::string serialize() const;

  bool operator==(const ParetoFront&) const = default;

 private:
  RelationVector rel_;
  std::vector<Label> labels_;  // canonical: lex ascending, antichain
};

}  // namespace seqopt
