#pragma once

#include <cstdint>
#include <vector>

#include <seqopt/graph.hpp>
#include <seqopt/pareto.hpp>

namespace seqopt {

/// Which walk lengths a table slice represents.
enum class Variant {
  AtMost,   // M[i, v] covers walks v -> t with at most i arcs
  Exactly,  // M[i, v] covers walks v -> t with exactly i arcs
};

/// Per-iteration frontier statistics of one run.
struct RunStats {
  /// front_sizes[i][v] = |M[i, v]| for i = 0..n-1.
  std::vector<std::vector<int>> front_sizes;
  /// p_ei[i] = max_v front_sizes[i][v].
  std::vector<int> p_ei;
  /// max_i p_ei[i].
  int p_e = 0;
};

/**
 * Full table of label-correcting frontiers M[i, v] for i = 0..n-1, anchored
 * at a fixed target node. All fronts share the componentwise (<=,...,<=)
 * relation. The at-most variant stores every i-slice too; its slice n-1 is
 * the answer per node. For the exactly variant the per-source answer is the
 * front of the union over all slices.
 */
class LabelTable {
 public:
  LabelTable(Variant variant, int target, unsigned dimension,
             std::vector<std::vector<ParetoFront>> layers);

  Variant variant() const { return variant_; }
  int target() const { return target_; }
  unsigned dimension() const { return k_; }
  int node_count() const { return static_cast<int>(layers_.front().size()); }
  /// Number of stored slices (node_count(), i = 0..n-1).
  int slices() const { return static_cast<int>(layers_.size()); }

  const ParetoFront& front(int i, int v) const;
  /// Efficient frontier of simple source -> target paths.
  ParetoFront final_front(int source) const;

 private:
  Variant variant_;
  int target_;
  unsigned k_;
  std::vector<std::vector<ParetoFront>> layers_;
};

struct BfOptions {
  /// Abort with BudgetExceeded when any front grows past this. 0 = unlimited.
  std::uint64_t max_front_size = 0;
  /// Worker threads for the per-node relaxation inside one iteration.
  unsigned jobs = 1;
};

struct BfResult {
  LabelTable table;
  RunStats stats;
};

/**
 * Multidimensional Bellman-Ford. Iterates
 *   M[i, v] = front( M[i-1, v] ∪  ∪_{arc (v,w)} translate(M[i-1, w], a_vw) )
 * from M[0, target] = {0}, M[0, v != target] = {} for i = 1..n-1; the
 * exactly variant drops the M[i-1, v] term. Deterministic for a given graph.
 */
BfResult bf_md(const MultiWeightGraph& g, int target, Variant variant,
               const BfOptions& options = {});

/// Recompute RunStats from a stored table (consistency cross-check).
RunStats stats_from_table(const LabelTable& table);

/// True iff some efficient label from source respects the componentwise
/// bounds. Throws ArityMismatch if bounds has the wrong arity.
bool decide(const LabelTable& table, int source, const std::vector<std::int64_t>& bounds);

/// Exhaustive efficient frontier over simple s -> t paths by DFS.
/// Guarded by a node-count limit; the default keeps the search near 10!.
ParetoFront brute_force_paths(const MultiWeightGraph& g, int s, int t, int node_limit = 10);

/// Walk extracted for one frontier label.
struct PathWitness {
  std::vector<int> arc_indices;  // into g.arcs()
  std::vector<int> nodes;        // node sequence, source first
  Label total;                   // componentwise sum of arc weights
};

/**
 * Deterministic witness for a label of final_front(source): descends the
 * table, preferring to stay on the same node (at-most variant) and otherwise
 * taking the first out-arc in input order whose residual label exists one
 * slice down. Throws std::invalid_argument if the label is not on the
 * frontier. With positive weights the result is a simple path.
 */
PathWitness reconstruct_path(const MultiWeightGraph& g, const LabelTable& table,
                             int source, const Label& label);

}  // namespace seqopt
