#include <seqopt/simulate.hpp>

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include <seqopt/rng.hpp>

namespace seqopt {

namespace {

/// 53-bit uniform in [0, 1); portable across standard libraries.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Weight slots of the graph under construction: one per arc for directed
/// graphs, one per undirected edge otherwise.
struct SlotList {
  int n = 0;
  bool directed = false;
  std::vector<std::pair<int, int>> slots;
};

SlotList topology_slots(const ExperimentConfig& c, std::mt19937_64& rng) {
  SlotList sl;
  sl.n = c.n;
  sl.directed = true;  // built-in topologies expand every pair to two arcs
  auto both = [&sl](int u, int v) {
    sl.slots.emplace_back(u, v);
    sl.slots.emplace_back(v, u);
  };
  switch (c.topology) {
    case Topology::Complete:
      for (int u = 0; u < c.n; ++u)
        for (int v = u + 1; v < c.n; ++v) both(u, v);
      return sl;
    case Topology::Gnp:
      // One structure coin per unordered pair, in lexicographic pair order.
      for (int u = 0; u < c.n; ++u)
        for (int v = u + 1; v < c.n; ++v)
          if (unit_draw(rng) < c.gnp_p) both(u, v);
      return sl;
    case Topology::Layered: {
      // Node 0 sits in the first layer; consecutive layers are completely
      // joined; node n-1 ends up in the last (possibly narrower) layer.
      const int w = c.layer_width;
      for (int u = 0; u < c.n; ++u)
        for (int v = u + 1; v < c.n; ++v)
          if (v / w == u / w + 1) both(u, v);
      return sl;
    }
    case Topology::File:
      break;  // handled by the caller
  }
  throw std::logic_error("topology_slots: unreachable");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (k < 1) throw std::invalid_argument("config: k must be >= 1");
  if (n < 2) throw std::invalid_argument("config: n must be >= 2");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (w_lo < 1 || w_hi < w_lo)
    throw std::invalid_argument("config: weight range needs 1 <= lo <= hi");
  if (topology == Topology::Gnp && !(gnp_p >= 0.0 && gnp_p <= 1.0))
    throw std::invalid_argument("config: gnp p must be in [0, 1]");
  if (topology == Topology::Layered && layer_width < 1)
    throw std::invalid_argument("config: layer width must be >= 1");
  if (topology == Topology::File && graph_file.empty())
    throw std::invalid_argument("config: file topology needs graph_file");
}

MultiWeightGraph gen_graph(const ExperimentConfig& config, int trial) {
  config.validate();
  std::mt19937_64 rng(derive_seed(config.seed, static_cast<std::uint64_t>(trial)));

  SlotList sl;
  if (config.topology == Topology::File) {
    const MultiWeightGraph base = load_graph(config.graph_file);
    sl.n = base.node_count();
    sl.directed = base.directed();
    const std::size_t step = base.directed() ? 1 : 2;
    for (std::size_t i = 0; i < base.arcs().size(); i += step)
      sl.slots.emplace_back(base.arcs()[i].from, base.arcs()[i].to);
  } else {
    sl = topology_slots(config, rng);
  }

  // Weights are drawn dimension-major in fixed slot order, after the
  // topology draws, so the stream layout is stable.
  const std::size_t e = sl.slots.size();
  std::vector<std::vector<std::int64_t>> w(e, std::vector<std::int64_t>(config.k));
  for (unsigned d = 0; d < config.k; ++d) {
    if (config.weight_model == WeightModel::IidUniform) {
      for (std::size_t i = 0; i < e; ++i) w[i][d] = bounded(rng, config.w_lo, config.w_hi);
    } else {
      std::vector<std::int64_t> pool(e);
      std::iota(pool.begin(), pool.end(), 1);
      shuffle_portable(pool, rng);
      for (std::size_t i = 0; i < e; ++i) w[i][d] = pool[i];
    }
  }

  MultiWeightGraph g(sl.n, config.k, sl.directed);
  for (std::size_t i = 0; i < e; ++i) g.add_edge(sl.slots[i].first, sl.slots[i].second, w[i]);
  return g;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<ExperimentRecord> records(static_cast<std::size_t>(config.trials));

  auto run_trial = [&](int t) {
    ExperimentRecord& rec = records[static_cast<std::size_t>(t)];
    rec.trial = t;
    rec.seed_used = derive_seed(config.seed, static_cast<std::uint64_t>(t));
    const auto start = std::chrono::steady_clock::now();
    try {
      const MultiWeightGraph g = gen_graph(config, t);
      BfOptions opt;
      opt.max_front_size = config.front_budget;
      const BfResult r = bf_md(g, g.node_count() - 1, config.variant, opt);
      rec.p_ei.assign(r.stats.p_ei.begin() + 1, r.stats.p_ei.end());
      rec.p_e = r.stats.p_e;
    } catch (const BudgetExceeded& e) {
      rec.error = e.what();
      rec.p_ei.clear();
      rec.p_e = 0;
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  };

  if (config.jobs <= 1 || config.trials == 1) {
    for (int t = 0; t < config.trials; ++t) run_trial(t);
  } else {
    const unsigned jobs = std::min<unsigned>(config.jobs, static_cast<unsigned>(config.trials));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (int t = static_cast<int>(w); t < config.trials; t += static_cast<int>(jobs))
          run_trial(t);
      });
    for (std::thread& th : pool) th.join();
  }
  return records;
}

HypothesisResult hypothesis_report(const std::vector<ExperimentRecord>& records,
                                   const ExperimentConfig& config) {
  if (records.empty()) throw std::invalid_argument("hypothesis_report: no records");
  HypothesisResult res;

  const double q_base = std::pow(static_cast<double>(config.n), config.fit_degree) *
                        std::log(static_cast<double>(config.n));
  auto threshold = [&](double c, unsigned m3, int i) {
    return static_cast<double>(std::ceil(c * q_base * i)) + m3;
  };

  double worst = 0.0;
  for (const ExperimentRecord& r : records) {
    if (!r.error.empty()) {
      ++res.trials_failed;
      continue;
    }
    ++res.trials_ok;
    res.max_p_e = std::max(res.max_p_e, r.p_e);
    for (std::size_t i = 0; i < r.p_ei.size(); ++i) {
      const double p = r.p_ei[i];
      if (p <= config.m3) continue;  // c = 0 already covers it
      const double need = (p - config.m3 - 1.0) / (q_base * static_cast<double>(i + 1));
      worst = std::max(worst, need);
    }
  }
  // The bound is strict (ceil(c q) >= p - M3 needs c q > p - M3 - 1), so land
  // just above the supremum.
  res.fitted_c = worst > 0 ? worst * (1.0 + 1e-9) + 1e-12 : 0.0;

  auto exceedance = [&](double c, unsigned m3) {
    std::uint64_t over = 0, total = 0;
    for (const ExperimentRecord& r : records) {
      if (!r.error.empty()) continue;
      for (std::size_t i = 0; i < r.p_ei.size(); ++i) {
        ++total;
        if (r.p_ei[i] > threshold(c, m3, static_cast<int>(i) + 1)) ++over;
      }
    }
    return total == 0 ? 0.0 : static_cast<double>(over) / static_cast<double>(total);
  };

  for (int step = 0; step <= 12; ++step) {
    const double c = 0.25 * step;
    res.c_grid.push_back({c, exceedance(c, config.m3)});
  }
  const unsigned m3_max = std::max(10u, 2 * config.m3);
  for (unsigned m3 = 0; m3 <= m3_max; ++m3)
    res.m3_trend.push_back({m3, exceedance(res.fitted_c, m3)});
  return res;
}

Report HypothesisResult::report(const ExperimentConfig& config) const {
  Report r;
  r.add("check", "hypothesis_fit");
  r.add("k", config.k);
  r.add("n", config.n);
  r.add("topology", to_string(config.topology));
  r.add("weight_model", to_string(config.weight_model));
  r.add("variant", config.variant == Variant::AtMost ? "at-most" : "exactly");
  r.add("m3", config.m3);
  r.add("fit_degree", config.fit_degree);
  r.add("seed", config.seed);
  r.add("trials_ok", trials_ok);
  r.add("trials_failed", trials_failed);
  r.add("max_p_e", max_p_e);
  r.add("fitted_c", fitted_c);
  for (const GridPoint& g : c_grid)
    r.add("exceedance_c_" + std::to_string(g.c).substr(0, 4), g.exceedance);
  for (const M3Point& m : m3_trend)
    r.add("exceedance_m3_" + std::to_string(m.m3), m.exceedance);
  return r;
}

std::string to_csv(const std::vector<ExperimentRecord>& records) {
  if (records.empty()) throw std::invalid_argument("to_csv: no records");
  std::string out = "# rng=";
  out += kRngAlgorithm;
  out += "\ntrial,i,p_ei,p_e,seed\n";
  for (const ExperimentRecord& r : records) {
    if (!r.error.empty()) continue;
    for (std::size_t i = 0; i < r.p_ei.size(); ++i) {
      out += std::to_string(r.trial);
      out += ',';
      out += std::to_string(i + 1);
      out += ',';
      out += std::to_string(r.p_ei[i]);
      out += ',';
      out += std::to_string(r.p_e);
      out += ',';
      out += std::to_string(r.seed_used);
      out += '\n';
    }
  }
  return out;
}

std::vector<ExperimentRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_rng = false, saw_header = false;
  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# rng=", 0) == 0) saw_rng = true;
      continue;
    }
    if (!saw_header) {
      if (line != "trial,i,p_ei,p_e,seed") throw ParseError("bad CSV header", line_no);
      saw_header = true;
      continue;
    }
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> f;
    while (std::getline(cells, cell, ',')) f.push_back(cell);
    if (f.size() != 5) throw ParseError("expected 5 CSV fields", line_no);
    try {
      const int trial = std::stoi(f[0]);
      const std::size_t i = static_cast<std::size_t>(std::stoul(f[1]));
      if (records.empty() || records.back().trial != trial) {
        ExperimentRecord r;
        r.trial = trial;
        r.seed_used = std::stoull(f[4]);
        records.push_back(std::move(r));
      }
      ExperimentRecord& r = records.back();
      if (i != r.p_ei.size() + 1) throw ParseError("iteration out of order", line_no);
      r.p_ei.push_back(std::stoi(f[2]));
      r.p_e = std::stoi(f[3]);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad CSV field", line_no);
    }
  }
  if (!saw_rng || !saw_header) throw ParseError("missing CSV preamble");
  return records;
}

Topology parse_topology(const std::string& name) {
  if (name == "complete") return Topology::Complete;
  if (name == "gnp") return Topology::Gnp;
  if (name == "layered") return Topology::Layered;
  if (name == "file") return Topology::File;
  throw std::invalid_argument("unknown topology: " + name);
}

WeightModel parse_weight_model(const std::string& name) {
  if (name == "iid_uniform") return WeightModel::IidUniform;
  if (name == "random_permutation") return WeightModel::RandomPermutation;
  throw std::invalid_argument("unknown weight model: " + name);
}

std::string to_string(Topology t) {
  switch (t) {
    case Topology::Complete: return "complete";
    case Topology::Gnp: return "gnp";
    case Topology::Layered: return "layered";
    case Topology::File: return "file";
  }
  return "?";
}

std::string to_string(WeightModel m) {
  return m == WeightModel::IidUniform ? "iid_uniform" : "random_permutation";
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid config JSON: ") + e.what());
  }
  ExperimentConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "k") c.k = value.get<unsigned>();
      else if (key == "n") c.n = value.get<int>();
      else if (key == "topology") c.topology = parse_topology(value.get<std::string>());
      else if (key == "gnp_p") c.gnp_p = value.get<double>();
      else if (key == "layer_width") c.layer_width = value.get<int>();
      else if (key == "graph_file") c.graph_file = value.get<std::string>();
      else if (key == "weight_model") c.weight_model = parse_weight_model(value.get<std::string>());
      else if (key == "w_lo") c.w_lo = value.get<std::int64_t>();
      else if (key == "w_hi") c.w_hi = value.get<std::int64_t>();
      else if (key == "trials") c.trials = value.get<int>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "m3") c.m3 = value.get<unsigned>();
      else if (key == "fit_degree") c.fit_degree = value.get<unsigned>();
      else if (key == "variant")
        c.variant = value.get<std::string>() == "exactly" ? Variant::Exactly : Variant::AtMost;
      else if (key == "front_budget") c.front_budget = value.get<std::uint64_t>();
      else if (key == "jobs") c.jobs = value.get<unsigned>();
      else throw ParseError("unknown config key: " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config JSON shape: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return c;
}

std::string ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["n"] = n;
  j["topology"] = seqopt::to_string(topology);
  if (topology == Topology::Gnp) j["gnp_p"] = gnp_p;
  if (topology == Topology::Layered) j["layer_width"] = layer_width;
  if (topology == Topology::File) j["graph_file"] = graph_file;
  j["weight_model"] = seqopt::to_string(weight_model);
  j["w_lo"] = w_lo;
  j["w_hi"] = w_hi;
  j["trials"] = trials;
  j["seed"] = seed;
  j["m3"] = m3;
  j["fit_degree"] = fit_degree;
  j["variant"] = variant == Variant::Exactly ? "exactly" : "at-most";
  j["front_budget"] = front_budget;
  j["jobs"] = jobs;
  return j.dump(2);
}

}  // namespace seqopt
