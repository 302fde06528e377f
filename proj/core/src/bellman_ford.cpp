#include <seqopt/bellman_ford.hpp>

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace seqopt {

LabelTable::LabelTable(Variant variant, int target, unsigned dimension,
                       std::vector<std::vector<ParetoFront>> layers)
    : variant_(variant), target_(target), k_(dimension), layers_(std::move(layers)) {}

const ParetoFront& LabelTable::front(int i, int v) const {
  if (i < 0 || i >= slices()) throw std::out_of_range("LabelTable: slice out of range");
  if (v < 0 || v >= node_count()) throw std::out_of_range("LabelTable: node out of range");
  return layers_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
}

ParetoFront LabelTable::final_front(int source) const {
  if (source < 0 || source >= node_count())
    throw std::out_of_range("LabelTable: node out of range");
  if (variant_ == Variant::AtMost) return layers_.back()[static_cast<std::size_t>(source)];
  ParetoFront acc(RelationVector::all_less_eq(k_));
  for (const auto& layer : layers_) acc = acc.merge(layer[static_cast<std::size_t>(source)]);
  return acc;
}

BfResult bf_md(const MultiWeightGraph& g, int target, Variant variant, const BfOptions& options) {
  const int n = g.node_count();
  const unsigned k = g.dimension();
  if (target < 0 || target >= n) throw std::invalid_argument("bf_md: target out of range");
  const RelationVector rel = RelationVector::all_less_eq(k);

  std::vector<std::vector<ParetoFront>> layers;
  layers.reserve(static_cast<std::size_t>(n));
  std::vector<ParetoFront> base(static_cast<std::size_t>(n), ParetoFront(rel));
  base[static_cast<std::size_t>(target)] =
      ParetoFront::from_set({Label::zeros(k)}, rel);
  layers.push_back(std::move(base));

  for (int i = 1; i < n; ++i) {
    const std::vector<ParetoFront>& prev = layers.back();
    std::vector<ParetoFront> cur(static_cast<std::size_t>(n), ParetoFront(rel));

    auto relax_node = [&](int v) {
      std::vector<Label> candidates;
      if (variant == Variant::AtMost) {
        const auto& keep = prev[static_cast<std::size_t>(v)].labels();
        candidates.insert(candidates.end(), keep.begin(), keep.end());
      }
      for (int ai : g.out_arcs(v)) {
        const Arc& arc = g.arcs()[static_cast<std::size_t>(ai)];
        const Label delta{std::vector<std::int64_t>(arc.w)};
        for (const Label& l : prev[static_cast<std::size_t>(arc.to)].labels())
          candidates.push_back(l + delta);
      }
      cur[static_cast<std::size_t>(v)] = ParetoFront::from_set(std::move(candidates), rel);
      if (options.max_front_size > 0 &&
          cur[static_cast<std::size_t>(v)].size() > options.max_front_size)
        throw BudgetExceeded("bf_md: front at node " + std::to_string(v) + ", iteration " +
                             std::to_string(i) + " has " +
                             std::to_string(cur[static_cast<std::size_t>(v)].size()) +
                             " labels, budget " + std::to_string(options.max_front_size));
    };

    if (options.jobs <= 1 || n < 4) {
      for (int v = 0; v < n; ++v) relax_node(v);
    } else {
      // Nodes within one iteration only read the immutable previous layer.
      const unsigned jobs = std::min<unsigned>(options.jobs, static_cast<unsigned>(n));
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(jobs);
      for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (int v = static_cast<int>(w); v < n; v += static_cast<int>(jobs)) relax_node(v);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (std::thread& t : pool) t.join();
      for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    }
    layers.push_back(std::move(cur));
  }

  LabelTable table(variant, target, k, std::move(layers));
  RunStats stats = stats_from_table(table);
  return BfResult{std::move(table), std::move(stats)};
}

RunStats stats_from_table(const LabelTable& table) {
  RunStats s;
  const int n = table.node_count();
  s.front_sizes.resize(static_cast<std::size_t>(table.slices()));
  s.p_ei.resize(static_cast<std::size_t>(table.slices()), 0);
  for (int i = 0; i < table.slices(); ++i) {
    auto& row = s.front_sizes[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      row[static_cast<std::size_t>(v)] = static_cast<int>(table.front(i, v).size());
      s.p_ei[static_cast<std::size_t>(i)] =
          std::max(s.p_ei[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(v)]);
    }
    s.p_e = std::max(s.p_e, s.p_ei[static_cast<std::size_t>(i)]);
  }
  return s;
}

bool decide(const LabelTable& table, int source, const std::vector<std::int64_t>& bounds) {
  if (bounds.size() != table.dimension())
    throw ArityMismatch("decide: bounds have " + std::to_string(bounds.size()) +
                        " components, expected " + std::to_string(table.dimension()));
  const ParetoFront front = table.final_front(source);
  for (const Label& l : front.labels()) {
    bool ok = true;
    for (unsigned i = 0; i < l.arity(); ++i)
      if (l[i] > bounds[i]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

ParetoFront brute_force_paths(const MultiWeightGraph& g, int s, int t, int node_limit) {
  const int n = g.node_count();
  if (n > node_limit)
    throw std::invalid_argument("brute_force_paths: node count " + std::to_string(n) +
                                " exceeds limit " + std::to_string(node_limit));
  if (s < 0 || s >= n || t < 0 || t >= n)
    throw std::invalid_argument("brute_force_paths: node out of range");
  const unsigned k = g.dimension();
  std::vector<Label> found;
  std::vector<bool> visited(static_cast<std::size_t>(n), false);

  // DFS over simple paths, accumulating the weight vector.
  std::vector<std::int64_t> acc(k, 0);
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == t) {
      found.emplace_back(std::vector<std::int64_t>(acc));
      return;  // extending past t only adds positive weight on a revisit
    }
    visited[static_cast<std::size_t>(v)] = true;
    for (int ai : g.out_arcs(v)) {
      const Arc& arc = g.arcs()[static_cast<std::size_t>(ai)];
      if (visited[static_cast<std::size_t>(arc.to)]) continue;
      for (unsigned i = 0; i < k; ++i) acc[i] += arc.w[i];
      self(self, arc.to);
      for (unsigned i = 0; i < k; ++i) acc[i] -= arc.w[i];
    }
    visited[static_cast<std::size_t>(v)] = false;
  };
  dfs(dfs, s);
  return ParetoFront::from_set(std::move(found), RelationVector::all_less_eq(k));
}

PathWitness reconstruct_path(const MultiWeightGraph& g, const LabelTable& table, int source,
                             const Label& label) {
  if (label.arity() != table.dimension())
    throw ArityMismatch("reconstruct_path: label arity mismatch");
  const int n = table.node_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("reconstruct_path: source out of range");

  int i = -1;
  if (table.variant() == Variant::AtMost) {
    if (!table.front(n - 1, source).contains(label))
      throw std::invalid_argument("reconstruct_path: label not on the frontier");
    i = n - 1;
  } else {
    for (int j = 0; j < n && i < 0; ++j)
      if (table.front(j, source).contains(label)) i = j;
    if (i < 0) throw std::invalid_argument("reconstruct_path: label not in any slice");
  }

  PathWitness w;
  w.nodes.push_back(source);
  Label cur = label;
  int v = source;
  while (i > 0) {
    if (table.variant() == Variant::AtMost && table.front(i - 1, v).contains(cur)) {
      --i;
      continue;
    }
    bool stepped = false;
    for (int ai : g.out_arcs(v)) {
      const Arc& arc = g.arcs()[static_cast<std::size_t>(ai)];
      bool feasible = true;
      for (unsigned c = 0; c < cur.arity(); ++c)
        if (cur[c] < arc.w[c]) {
          feasible = false;
          break;
        }
      if (!feasible) continue;
      const Label residual = cur - Label{std::vector<std::int64_t>(arc.w)};
      if (table.front(i - 1, arc.to).contains(residual)) {
        w.arc_indices.push_back(ai);
        w.nodes.push_back(arc.to);
        cur = residual;
        v = arc.to;
        --i;
        stepped = true;
        break;
      }
    }
    if (!stepped)
      throw std::logic_error("reconstruct_path: no predecessor; table inconsistent");
  }
  if (v != table.target() || cur != Label::zeros(cur.arity()))
    throw std::logic_error("reconstruct_path: walk did not close at the target");
  w.total = label;
  return w;
}

}  // namespace seqopt
