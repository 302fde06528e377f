#include <seqopt/pareto.hpp>

#include <algorithm>
#include <stdexcept>

namespace seqopt {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("label component overflow");
  return r;
}

bool component_holds(Rel rel, std::int64_t a, std::int64_t b) {
  switch (rel) {
    case Rel::Less: return a < b;
    case Rel::LessEq: return a <= b;
    case Rel::Greater: return a > b;
    case Rel::GreaterEq: return a >= b;
  }
  return false;
}

}  // namespace

Label::Label(std::vector<std::int64_t> components) : c_(std::move(components)) {
  if (c_.empty()) throw std::invalid_argument("Label: arity must be >= 1");
}

Label Label::zeros(unsigned arity) {
  return Label(std::vector<std::int64_t>(arity, 0));
}

Label Label::operator+(const Label& o) const {
  if (arity() != o.arity()) throw ArityMismatch("Label addition: arity mismatch");
  std::vector<std::int64_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = checked_add(c_[i], o.c_[i]);
  return Label(std::move(v));
}

Label Label::operator-(const Label& o) const {
  if (arity() != o.arity()) throw ArityMismatch("Label subtraction: arity mismatch");
  std::vector<std::int64_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(c_[i], o.c_[i], &r)) throw std::overflow_error("label component overflow");
    v[i] = r;
  }
  return Label(std::move(v));
}

std::string Label::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(c_[i]);
  }
  return s;
}

RelationVector::RelationVector(std::vector<Rel> rels) : rels_(std::move(rels)) {
  if (rels_.empty()) throw std::invalid_argument("RelationVector: arity must be >= 1");
}

RelationVector RelationVector::all_less_eq(unsigned arity) {
  return RelationVector(std::vector<Rel>(arity, Rel::LessEq));
}

RelationVector RelationVector::all_less(unsigned arity) {
  return RelationVector(std::vector<Rel>(arity, Rel::Less));
}

bool RelationVector::less_side() const {
  for (Rel r : rels_)
    if (r != Rel::Less && r != Rel::LessEq) return false;
  return true;
}

bool dominates(const Label& a, const Label& b, const RelationVector& r) {
  if (a.arity() != b.arity() || a.arity() != r.arity())
    throw ArityMismatch("dominates: arity mismatch");
  for (unsigned i = 0; i < a.arity(); ++i)
    if (!component_holds(r[i], a[i], b[i])) return false;
  return true;
}

bool covers(const Label& a, const Label& u, const RelationVector& r) {
  return a == u || dominates(a, u, r);
}

ParetoFront::ParetoFront(RelationVector rel) : rel_(std::move(rel)) {}

ParetoFront ParetoFront::from_set(std::vector<Label> labels, const RelationVector& rel) {
  for (const Label& l : labels)
    if (l.arity() != rel.arity()) throw ArityMismatch("from_set: arity mismatch");
  ParetoFront f(rel);
  if (labels.empty()) return f;

  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  const unsigned k = rel.arity();
  if (rel.less_side()) {
    // In lex order a later label is >= on the first differing component, so
    // it can never dominate an earlier kept one: one forward sweep suffices.
    std::vector<Label>& front = f.labels_;
    if (k == 2 && rel[0] == Rel::LessEq && rel[1] == Rel::LessEq) {
      // Staircase: firsts ascend, seconds strictly descend.
      std::int64_t min_second = 0;
      for (const Label& x : labels) {
        if (front.empty() || x[1] < min_second) {
          front.push_back(x);
          min_second = x[1];
        }
      }
    } else {
      for (const Label& x : labels) {
        bool dominated = false;
        for (const Label& a : front)
          if (dominates(a, x, rel)) {
            dominated = true;
            break;
          }
        if (!dominated) front.push_back(x);
      }
    }
    return f;
  }

  // General relations: componentwise conjunctions of total-order relations
  // are antisymmetric on distinct values, so "minimal elements" is
  // well-defined; quadratic scan at unit-test scale.
  for (std::size_t i = 0; i < labels.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < labels.size() && !dominated; ++j)
      if (j != i && dominates(labels[j], labels[i], rel)) dominated = true;
    if (!dominated) f.labels_.push_back(labels[i]);
  }
  return f;
}

ParetoFront ParetoFront::insert(const Label& x) const {
  if (x.arity() != rel_.arity()) throw ArityMismatch("insert: arity mismatch");

  if (rel_.arity() == 2 && rel_[0] == Rel::LessEq && rel_[1] == Rel::LessEq) {
    // Staircase update. Predecessor by first component has the minimum
    // second among members with first <= x[0]; it decides domination.
    auto pos = std::upper_bound(labels_.begin(), labels_.end(), x);
    if (pos != labels_.begin()) {
      const Label& pred = *std::prev(pos);
      if (pred[0] <= x[0] && pred[1] <= x[1]) return *this;  // covered (or equal)
    }
    ParetoFront f(rel_);
    f.labels_.reserve(labels_.size() + 1);
    f.labels_.assign(labels_.begin(), pos);
    f.labels_.push_back(x);
    // Successors dominated by x form a contiguous run: their firsts are
    // >= x[0] and their seconds descend toward x[1].
    for (auto it = pos; it != labels_.end(); ++it)
      if ((*it)[1] < x[1]) f.labels_.push_back(*it);
    return f;
  }

  for (const Label& a : labels_)
    if (covers(a, x, rel_)) return *this;
  ParetoFront f(rel_);
  f.labels_.reserve(labels_.size() + 1);
  bool placed = false;
  for (const Label& a : labels_) {
    if (dominates(x, a, rel_)) continue;
    if (!placed && x < a) {
      f.labels_.push_back(x);
      placed = true;
    }
    f.labels_.push_back(a);
  }
  if (!placed) f.labels_.push_back(x);
  return f;
}

ParetoFront ParetoFront::merge(const ParetoFront& o) const {
  if (rel_ != o.rel_) throw std::invalid_argument("merge: relation mismatch");
  if (o.empty()) return *this;
  if (empty()) return o;
  std::vector<Label> all;
  all.reserve(labels_.size() + o.labels_.size());
  all.insert(all.end(), labels_.begin(), labels_.end());
  all.insert(all.end(), o.labels_.begin(), o.labels_.end());
  return from_set(std::move(all), rel_);
}

ParetoFront ParetoFront::translate(const Label& delta) const {
  if (delta.arity() != rel_.arity()) throw ArityMismatch("translate: arity mismatch");
  ParetoFront f(rel_);
  f.labels_.reserve(labels_.size());
  // Adding a constant preserves both the lex order and all dominance
  // relations, so the result is already canonical.
  for (const Label& a : labels_) f.labels_.push_back(a + delta);
  return f;
}

bool ParetoFront::covers_label(const Label& u) const {
  for (const Label& a : labels_)
    if (covers(a, u, rel_)) return true;
  return false;
}

bool ParetoFront::contains(const Label& u) const {
  return std::binary_search(labels_.begin(), labels_.end(), u);
}

std::string ParetoFront::serialize() const {
  std::string s;
  for (const Label& a : labels_) {
    s += a.to_string();
    s += '\n';
  }
  return s;
}

}  // namespace seqopt
