#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <seqopt/errors.hpp>

namespace seqopt {

/// Directed arc with a k-component weight vector, every component >= 1.
struct Arc {
  int from = 0;
  int to = 0;
  std::vector<std::int64_t> w;
};

/**
 * Finite graph with k-dimensional positive integer arc weights. Undirected
 * input is expanded to two opposite arcs sharing the weight vector at load
 * time; directed() records which kind the input was. Self loops are rejected
 * (a walk never benefits from one under positive weights) and parallel arcs
 * are allowed.
 */
class MultiWeightGraph {
 public:
  MultiWeightGraph(int node_count, unsigned dimension, bool directed);

  int node_count() const { return n_; }
  unsigned dimension() const { return k_; }
  bool directed() const { return directed_; }

  /// For undirected graphs this inserts both orientations.
  void add_edge(int from, int to, std::vector<std::int64_t> w);

  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Indices into arcs() of the arcs leaving v, in insertion order.
  const std::vector<int>& out_arcs(int v) const;

 private:
  void add_arc(int from, int to, const std::vector<std::int64_t>& w);

  int n_;
  unsigned k_;
  bool directed_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

/**
 * Text format:
 *   line 1:  k n directed|undirected
 *   then     from to w1 ... wk        (one edge per line)
 * Blank lines and lines starting with '#' are skipped. Errors carry 1-based
 * line numbers.
 */
MultiWeightGraph parse_graph_text(std::istream& in);
MultiWeightGraph parse_graph_text(const std::string& text);

/// JSON equivalent: {"k":.., "n":.., "directed":.., "edges":[{"from","to","w"}..]}.
MultiWeightGraph parse_graph_json(const std::string& text);

/// Reads a file, dispatching on a leading '{' to the JSON parser.
MultiWeightGraph load_graph(const std::string& path);

std::string to_text(const MultiWeightGraph& g);
std::string to_json(const MultiWeightGraph& g);

}  // namespace seqopt
