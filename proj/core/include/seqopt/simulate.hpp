#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <seqopt/bellman_ford.hpp>
#include <seqopt/graph.hpp>
#include <seqopt/report.hpp>

namespace seqopt {

enum class Topology { Complete, Gnp, Layered, File };
enum class WeightModel { IidUniform, RandomPermutation };

/// RNG identifier embedded in every CSV so experiments are auditable.
inline constexpr const char* kRngAlgorithm = "splitmix64:mt19937_64";

struct ExperimentConfig {
  unsigned k = 2;
  int n = 10;
  Topology topology = Topology::Complete;
  double gnp_p = 0.5;       // Topology::Gnp
  int layer_width = 3;      // Topology::Layered
  std::string graph_file;   // Topology::File
  WeightModel weight_model = WeightModel::IidUniform;
  std::int64_t w_lo = 1;    // IidUniform range, inclusive
  std::int64_t w_hi = 1000;
  int trials = 1;
  std::uint64_t seed = 0;
  unsigned m3 = 5;          // hypothesis margin M3
  unsigned fit_degree = 0;  // p_n(n) = n^fit_degree; 0 = the constant default
  Variant variant = Variant::AtMost;
  std::uint64_t front_budget = 0;  // per-front label budget; 0 = unlimited
  unsigned jobs = 1;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;

  /// JSON object with these fields; unknown keys rejected.
  static ExperimentConfig from_json(const std::string& text);
  std::string to_json() const;
};

struct ExperimentRecord {
  int trial = 0;
  std::vector<int> p_ei;  // iterations i = 1..n-1
  int p_e = 0;
  double wall_ms = 0.0;
  std::uint64_t seed_used = 0;
  std::string error;  // nonempty when the trial aborted (budget); p_ei empty
};

/// Deterministic graph for (config.seed, trial). The built-in topologies
/// produce directed graphs carrying both orientations of every chosen pair;
/// each arc is an independent weight slot (complete with n=4 has 12). A file
/// topology keeps the file's structure, with one slot per arc when directed
/// and one per edge when undirected, and replaces the file's weights with
/// model draws. Weights are drawn per dimension independently; under
/// RandomPermutation each dimension's weights form a permutation of
/// 1..#slots.
MultiWeightGraph gen_graph(const ExperimentConfig& config, int trial);

/// Runs every trial (graph build + bf_md + RunStats). A budget failure is
/// recorded on its trial; other trials are unaffected.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

/**
 * Hypothesis fit for p_ei <= ceil(c * p_n(n) * i * ln n) + M3 with
 * p_n(n) = n^fit_degree. fitted_c is the smallest such c across all recorded
 * (trial, i); the report adds the exceedance fraction over a grid of c values
 * and the exceedance trend in M3 at the fitted c.
 */
struct HypothesisResult {
  double fitted_c = 0.0;
  int max_p_e = 0;
  unsigned trials_ok = 0;
  unsigned trials_failed = 0;
  struct GridPoint {
    double c = 0.0;
    double exceedance = 0.0;  // fraction of (trial, i) pairs over threshold
  };
  std::vector<GridPoint> c_grid;
  struct M3Point {
    unsigned m3 = 0;
    double exceedance = 0.0;  // at the fitted c
  };
  std::vector<M3Point> m3_trend;
  Report report(const ExperimentConfig& config) const;
};
HypothesisResult hypothesis_report(const std::vector<ExperimentRecord>& records,
                                   const ExperimentConfig& config);

/// CSV schema: `trial,i,p_ei,p_e,seed`, one row per (trial, i), preceded by
/// a `# rng=...` comment line. Throws std::invalid_argument when records is
/// empty. Failed trials contribute no rows.
std::string to_csv(const std::vector<ExperimentRecord>& records);

/// Round-trip parser for the CSV (comment and header required).
std::vector<ExperimentRecord> parse_csv(const std::string& text);

Topology parse_topology(const std::string& name);
WeightModel parse_weight_model(const std::string& name);
std::string to_string(Topology t);
std::string to_string(WeightModel m);

}  // namespace seqopt
