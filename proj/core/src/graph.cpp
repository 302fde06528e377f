#include <seqopt/graph.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace seqopt {

MultiWeightGraph::MultiWeightGraph(int node_count, unsigned dimension, bool directed)
    : n_(node_count), k_(dimension), directed_(directed), out_(static_cast<std::size_t>(std::max(node_count, 0))) {
  if (node_count < 1) throw std::invalid_argument("graph: node count must be >= 1");
  if (dimension < 1) throw std::invalid_argument("graph: weight dimension must be >= 1");
}

void MultiWeightGraph::add_edge(int from, int to, std::vector<std::int64_t> w) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_)
    throw std::invalid_argument("graph: node out of range: " + std::to_string(from) + " -> " +
                                std::to_string(to));
  if (from == to) throw std::invalid_argument("graph: self loop rejected at node " + std::to_string(from));
  if (w.size() != k_)
    throw ArityMismatch("graph: edge weight has " + std::to_string(w.size()) +
                        " components, expected " + std::to_string(k_));
  for (std::int64_t c : w)
    if (c < 1) throw std::invalid_argument("graph: weight components must be >= 1");
  add_arc(from, to, w);
  if (!directed_) add_arc(to, from, w);
}

void MultiWeightGraph::add_arc(int from, int to, const std::vector<std::int64_t>& w) {
  out_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back(Arc{from, to, w});
}

const std::vector<int>& MultiWeightGraph::out_arcs(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: node out of range");
  return out_[static_cast<std::size_t>(v)];
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::int64_t parse_int(const std::string& t, int line_no, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + t + "'", line_no);
  }
}

}  // namespace

MultiWeightGraph parse_graph_text(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  unsigned k = 0;
  int n = 0;
  bool directed = true;
  MultiWeightGraph g(1, 1, true);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> t = tokens(line);
    if (t.empty()) continue;
    if (!have_header) {
      if (t.size() != 3) throw ParseError("header must be 'k n directed|undirected'", line_no);
      k = static_cast<unsigned>(parse_int(t[0], line_no, "dimension k"));
      n = static_cast<int>(parse_int(t[1], line_no, "node count n"));
      if (t[2] == "directed")
        directed = true;
      else if (t[2] == "undirected")
        directed = false;
      else
        throw ParseError("expected 'directed' or 'undirected', got '" + t[2] + "'", line_no);
      try {
        g = MultiWeightGraph(n, k, directed);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
      }
      have_header = true;
      continue;
    }
    if (t.size() != 2 + k)
      throw ParseError("edge line needs 'from to' plus " + std::to_string(k) + " weights, got " +
                           std::to_string(t.size()) + " fields",
                       line_no);
    int from = static_cast<int>(parse_int(t[0], line_no, "node id"));
    int to = static_cast<int>(parse_int(t[1], line_no, "node id"));
    std::vector<std::int64_t> w(k);
    for (unsigned i = 0; i < k; ++i) w[i] = parse_int(t[2 + i], line_no, "weight");
    try {
      g.add_edge(from, to, std::move(w));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_header) throw ParseError("missing graph header");
  return g;
}

MultiWeightGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_text(in);
}

MultiWeightGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    MultiWeightGraph g(j.at("n").get<int>(), j.at("k").get<unsigned>(),
                       j.at("directed").get<bool>());
    for (const auto& e : j.at("edges")) {
      g.add_edge(e.at("from").get<int>(), e.at("to").get<int>(),
                 e.at("w").get<std::vector<std::int64_t>>());
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON shape: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

MultiWeightGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

std::string to_text(const MultiWeightGraph& g) {
  std::string s = std::to_string(g.dimension()) + " " + std::to_string(g.node_count()) + " " +
                  (g.directed() ? "directed" : "undirected") + "\n";
  // For undirected graphs every edge was stored as two consecutive arcs;
  // emit only the first of each pair.
  const std::size_t step = g.directed() ? 1 : 2;
  for (std::size_t i = 0; i < g.arcs().size(); i += step) {
    const Arc& a = g.arcs()[i];
    s += std::to_string(a.from) + " " + std::to_string(a.to);
    for (std::int64_t c : a.w) s += " " + std::to_string(c);
    s += "\n";
  }
  return s;
}

std::string to_json(const MultiWeightGraph& g) {
  nlohmann::ordered_json j;
  j["k"] = g.dimension();
  j["n"] = g.node_count();
  j["directed"] = g.directed();
  j["edges"] = nlohmann::ordered_json::array();
  const std::size_t step = g.directed() ? 1 : 2;
  for (std::size_t i = 0; i < g.arcs().size(); i += step) {
    const Arc& a = g.arcs()[i];
    j["edges"].push_back({{"from", a.from}, {"to", a.to}, {"w", a.w}});
  }
  return j.dump(2);
}

}  // namespace seqopt
