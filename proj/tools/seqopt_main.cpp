// Command-line entry point: table export, invariant suites, constrained
// shortest-path queries, and the frontier-growth simulation harness.
//
// Exit codes: 0 success / all checks passed, 1 a check or query-level
// verification failed, 2 usage or malformed input, 3 work budget exceeded,
// 4 vector arity mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <seqopt/bellman_ford.hpp>
#include <seqopt/enumeration.hpp>
#include <seqopt/errors.hpp>
#include <seqopt/graph.hpp>
#include <seqopt/numbers.hpp>
#include <seqopt/simulate.hpp>
#include <seqopt/table_io.hpp>
#include <seqopt/verify.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitArity = 4;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

struct TableArgs {
  unsigned k = 1;
  unsigned n_max = 6;
  std::string format = "tsv";
  bool json = false;
};

int run_table(const TableArgs& a) {
  const seqopt::SeqOptTable table = seqopt::build_table(a.k, a.n_max);
  if (a.json) {
    nlohmann::ordered_json j;
    j["k"] = a.k;
    j["n_max"] = a.n_max;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (unsigned n = 0; n <= a.n_max; ++n) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const seqopt::BigCount& v : table.row(n)) row.push_back(v.str());
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump(2) << '\n';
  } else if (a.format == "bfile") {
    std::cout << seqopt::to_bfile(table);
  } else {
    std::cout << seqopt::to_tsv(table);
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  seqopt::VerifyOptions options;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  const std::vector<seqopt::CheckResult> results =
      seqopt::run_suite(seqopt::parse_suite(a.suite), a.options);
  if (results.empty()) {
    std::cerr << "error: no checks match the given filters\n";
    return kExitUsage;
  }
  std::size_t passed = 0;
  for (const seqopt::CheckResult& r : results) passed += r.passed ? 1 : 0;
  if (a.json) {
    nlohmann::ordered_json j;
    j["suite"] = a.suite;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const seqopt::CheckResult& r : results)
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    j["checks"] = std::move(checks);
    j["passed"] = passed;
    j["failed"] = results.size() - passed;
    std::cout << j.dump(2) << '\n';
  } else {
    for (const seqopt::CheckResult& r : results)
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    std::cout << "summary: " << passed << '/' << results.size() << " checks passed\n";
  }
  return passed == results.size() ? kExitOk : kExitCheckFailed;
}

struct SolveArgs {
  std::string graph_path;
  std::vector<std::int64_t> query;  // s t b1 .. bk
  std::string variant = "at-most";
  std::uint64_t front_budget = 0;
  unsigned jobs = 1;
  bool show_frontier = false;
  bool json = false;
};

int run_solve(const SolveArgs& a) {
  const seqopt::MultiWeightGraph g = seqopt::load_graph(a.graph_path);
  if (a.query.size() < 2) throw seqopt::ParseError("query needs: s t b1 .. bk");
  const auto s = static_cast<int>(a.query[0]);
  const auto t = static_cast<int>(a.query[1]);
  if (s < 0 || s >= g.node_count() || t < 0 || t >= g.node_count())
    throw seqopt::ParseError("query nodes out of range");
  const std::vector<std::int64_t> bounds(a.query.begin() + 2, a.query.end());
  if (bounds.size() != g.dimension())
    throw seqopt::ArityMismatch("query has " + std::to_string(bounds.size()) +
                                " bounds for a " + std::to_string(g.dimension()) +
                                "-dimensional graph");

  const seqopt::Variant variant =
      a.variant == "exactly" ? seqopt::Variant::Exactly : seqopt::Variant::AtMost;
  seqopt::BfOptions options;
  options.max_front_size = a.front_budget;
  options.jobs = a.jobs;
  const seqopt::BfResult result = seqopt::bf_md(g, t, variant, options);
  const seqopt::ParetoFront front = result.table.final_front(s);

  const bool feasible = seqopt::decide(result.table, s, bounds);
  std::optional<seqopt::PathWitness> witness;
  if (feasible) {
    for (const seqopt::Label& label : front.labels()) {
      bool within = true;
      for (unsigned i = 0; i < label.arity() && within; ++i)
        within = label[i] <= bounds[i];
      if (within) {
        witness = seqopt::reconstruct_path(g, result.table, s, label);
        break;
      }
    }
  }

  if (a.json) {
    nlohmann::ordered_json j;
    j["feasible"] = feasible;
    j["source"] = s;
    j["target"] = t;
    j["bounds"] = bounds;
    j["variant"] = a.variant;
    if (witness) {
      j["label"] = witness->total.components();
      j["path"] = witness->nodes;
    }
    if (a.show_frontier) {
      nlohmann::ordered_json labels = nlohmann::ordered_json::array();
      for (const seqopt::Label& label : front.labels()) labels.push_back(label.components());
      j["frontier"] = std::move(labels);
    }
    j["p_e"] = result.stats.p_e;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (feasible ? "YES" : "NO") << '\n';
    if (witness) {
      std::cout << "label";
      for (const std::int64_t c : witness->total.components()) std::cout << ' ' << c;
      std::cout << '\n' << "path";
      for (const int v : witness->nodes) std::cout << ' ' << v;
      std::cout << '\n';
    }
    if (a.show_frontier) {
      std::cout << "frontier " << front.size() << '\n' << front.serialize();
    }
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string config_path;
  std::string topology;  // comma-separated list overrides the config
  std::string weight_model;
  std::string variant;
  std::string csv_path;
  std::string report_path;
  bool json = false;
  seqopt::ExperimentConfig overrides;  // numeric fields live here
};

std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

int run_simulate(const SimulateArgs& a, const CLI::App* cmd) {
  seqopt::ExperimentConfig config;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path, std::ios::binary);
    if (!in) throw seqopt::ParseError("cannot read config: " + a.config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    config = seqopt::ExperimentConfig::from_json(buf.str());
  }
  const auto given = [&cmd](const std::string& flag) { return cmd->count(flag) > 0; };
  if (given("--k")) config.k = a.overrides.k;
  if (given("--n")) config.n = a.overrides.n;
  if (given("--p")) config.gnp_p = a.overrides.gnp_p;
  if (given("--layer-width")) config.layer_width = a.overrides.layer_width;
  if (given("--graph-file")) config.graph_file = a.overrides.graph_file;
  if (given("--w-lo")) config.w_lo = a.overrides.w_lo;
  if (given("--w-hi")) config.w_hi = a.overrides.w_hi;
  if (given("--trials")) config.trials = a.overrides.trials;
  if (given("--seed")) config.seed = a.overrides.seed;
  if (given("--m3")) config.m3 = a.overrides.m3;
  if (given("--fit-degree")) config.fit_degree = a.overrides.fit_degree;
  if (given("--front-budget")) config.front_budget = a.overrides.front_budget;
  if (given("--jobs")) config.jobs = a.overrides.jobs;
  if (given("--weight-model")) config.weight_model = seqopt::parse_weight_model(a.weight_model);
  if (given("--variant"))
    config.variant =
        a.variant == "exactly" ? seqopt::Variant::Exactly : seqopt::Variant::AtMost;

  std::vector<seqopt::Topology> topologies;
  if (given("--topology"))
    for (const std::string& name : split_csv_list(a.topology))
      topologies.push_back(seqopt::parse_topology(name));
  else
    topologies.push_back(config.topology);
  if (topologies.empty()) throw seqopt::ParseError("empty topology list");

  struct Run {
    seqopt::ExperimentConfig config;
    std::vector<seqopt::ExperimentRecord> records;
    seqopt::HypothesisResult hypothesis;
  };
  std::vector<Run> runs;
  for (const seqopt::Topology topo : topologies) {
    Run run;
    run.config = config;
    run.config.topology = topo;
    run.config.validate();
    run.records = seqopt::run_experiment(run.config);
    run.hypothesis = seqopt::hypothesis_report(run.records, run.config);
    runs.push_back(std::move(run));
  }

  std::size_t argmax = 0;
  for (std::size_t i = 1; i < runs.size(); ++i)
    if (runs[i].hypothesis.max_p_e > runs[argmax].hypothesis.max_p_e) argmax = i;

  if (!a.csv_path.empty()) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      std::string path = a.csv_path;
      if (runs.size() > 1) {
        // One file per topology: insert the name before the extension.
        const std::string tag = "." + seqopt::to_string(runs[i].config.topology);
        const std::size_t dot = path.find_last_of('.');
        path = dot == std::string::npos ? path + tag
                                        : path.substr(0, dot) + tag + path.substr(dot);
      }
      write_file(path, seqopt::to_csv(runs[i].records));
    }
  }

  std::string report_text;
  if (a.json) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const Run& run : runs)
      items.push_back(
          nlohmann::ordered_json::parse(run.hypothesis.report(run.config).to_json()));
    j["runs"] = std::move(items);
    j["max_p_e_topology"] = seqopt::to_string(runs[argmax].config.topology);
    report_text = j.dump(2) + "\n";
  } else {
    for (const Run& run : runs) {
      report_text += run.hypothesis.report(run.config).to_text();
      report_text += '\n';
    }
    report_text +=
        "max_p_e_topology=" + seqopt::to_string(runs[argmax].config.topology) + "\n";
  }
  std::cout << report_text;
  if (!a.report_path.empty()) write_file(a.report_path, report_text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential optimization numbers, multiweight shortest paths, "
               "and the frontier-growth simulation harness"};
  app.require_subcommand(1);

  TableArgs table_args;
  CLI::App* table_cmd = app.add_subcommand("table", "Print the O_k triangle");
  table_cmd->add_option("--k", table_args.k, "Dimension k")
      ->required()
      ->check(CLI::Range(1u, 16u));
  table_cmd->add_option("--n", table_args.n_max, "Largest row n")
      ->required()
      ->check(CLI::Range(0u, 300u));
  table_cmd->add_option("--format", table_args.format, "tsv or bfile")
      ->check(CLI::IsMember({"tsv", "bfile"}));
  table_cmd->add_flag("--json", table_args.json, "JSON output");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("--suite", verify_args.suite, "oracle|bounds|poly|lemmas|all")
      ->check(CLI::IsMember({"oracle", "bounds", "poly", "lemmas", "all"}));
  verify_cmd->add_option("--which", verify_args.options.which,
                         "Only checks whose name contains this substring");
  verify_cmd->add_option("--k", verify_args.options.k, "Restrict to one dimension")
      ->check(CLI::Range(1, 16));
  verify_cmd->add_option("--n", verify_args.options.max_n, "Cap the size grids")
      ->check(CLI::Range(1, 1000));
  verify_cmd->add_option("--enum-budget", verify_args.options.enum_budget,
                         "Permutation-tuple budget")
      ->envname("SEQOPT_ENUM_BUDGET");
  verify_cmd->add_option("--combo-budget", verify_args.options.combo_budget,
                         "Combination-sum budget")
      ->envname("SEQOPT_COMBO_BUDGET");
  verify_cmd->add_option("--jobs", verify_args.options.jobs, "Worker threads");
  verify_cmd->add_flag("--progress", verify_args.options.progress,
                       "Progress notes on stderr");
  verify_cmd->add_flag("--json", verify_args.json, "JSON output");

  SolveArgs solve_args;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Weight-constrained shortest-path query");
  solve_cmd->add_option("--graph", solve_args.graph_path, "Graph file (text or JSON)")
      ->required();
  solve_cmd
      ->add_option("--query", solve_args.query,
                   "Query: source target bound1 .. boundk")
      ->required()
      ->expected(-2);
  solve_cmd->add_option("--variant", solve_args.variant, "at-most or exactly")
      ->check(CLI::IsMember({"at-most", "exactly"}));
  solve_cmd->add_option("--front-budget", solve_args.front_budget,
                        "Abort when a front outgrows this (0 = unlimited)")
      ->envname("SEQOPT_FRONT_BUDGET");
  solve_cmd->add_option("--jobs", solve_args.jobs, "Worker threads");
  solve_cmd->add_flag("--show-frontier", solve_args.show_frontier,
                      "Also print the efficient frontier");
  solve_cmd->add_flag("--json", solve_args.json, "JSON output");

  SimulateArgs sim_args;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Frontier-growth experiment");
  sim_cmd->add_option("--config", sim_args.config_path, "JSON config file");
  sim_cmd->add_option("--k", sim_args.overrides.k, "Dimension")->check(CLI::Range(1u, 16u));
  sim_cmd->add_option("--n", sim_args.overrides.n, "Node count");
  sim_cmd->add_option("--topology", sim_args.topology,
                      "complete|gnp|layered|file, comma-separated for a sweep");
  sim_cmd->add_option("--p", sim_args.overrides.gnp_p, "Edge probability for gnp");
  sim_cmd->add_option("--layer-width", sim_args.overrides.layer_width, "Layer width");
  sim_cmd->add_option("--graph-file", sim_args.overrides.graph_file,
                      "Graph file for the file topology");
  sim_cmd->add_option("--weight-model", sim_args.weight_model,
                      "iid_uniform or random_permutation")
      ->check(CLI::IsMember({"iid_uniform", "random_permutation"}));
  sim_cmd->add_option("--w-lo", sim_args.overrides.w_lo, "Smallest uniform weight");
  sim_cmd->add_option("--w-hi", sim_args.overrides.w_hi, "Largest uniform weight");
  sim_cmd->add_option("--trials", sim_args.overrides.trials, "Trial count");
  sim_cmd->add_option("--seed", sim_args.overrides.seed, "Experiment seed");
  sim_cmd->add_option("--m3", sim_args.overrides.m3, "Hypothesis margin M3");
  sim_cmd->add_option("--fit-degree", sim_args.overrides.fit_degree,
                      "Polynomial degree of p_n(n)");
  sim_cmd->add_option("--variant", sim_args.variant, "at-most or exactly")
      ->check(CLI::IsMember({"at-most", "exactly"}));
  sim_cmd->add_option("--front-budget", sim_args.overrides.front_budget,
                      "Per-front label budget (0 = unlimited)")
      ->envname("SEQOPT_FRONT_BUDGET");
  sim_cmd->add_option("--jobs", sim_args.overrides.jobs, "Parallel trials");
  sim_cmd->add_option("--csv", sim_args.csv_path, "Write per-iteration CSV here");
  sim_cmd->add_option("--report", sim_args.report_path, "Write the summary here");
  sim_cmd->add_flag("--json", sim_args.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (table_cmd->parsed()) return run_table(table_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (sim_cmd->parsed()) return run_simulate(sim_args, sim_cmd);
  } catch (const seqopt::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const seqopt::ArityMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArity;
  } catch (const seqopt::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
