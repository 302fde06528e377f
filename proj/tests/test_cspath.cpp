// Multidimensional Bellman-Ford against the exhaustive simple-path oracle:
// graph parsing, the diamond fixture, variant consistency, the k=1 classic
// degeneration, witness reconstruction, and the budget guard.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <seqopt/bellman_ford.hpp>
#include <seqopt/errors.hpp>
#include <seqopt/graph.hpp>
#include <seqopt/rng.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

using namespace seqopt;

namespace {

const char* const kDiamondText =
    "2 4 directed\n"
    "0 1 1 3\n"
    "1 3 1 3\n"
    "0 2 2 1\n"
    "2 3 2 1\n";

Label L(std::vector<std::int64_t> v) { return Label(std::move(v)); }

MultiWeightGraph random_graph(std::mt19937_64& rng, int n, unsigned k, std::int64_t w_hi) {
  MultiWeightGraph g(n, k, true);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || bounded(rng, 0, 1) == 0) continue;
      std::vector<std::int64_t> w(k);
      for (auto& c : w) c = bounded(rng, 1, w_hi);
      g.add_edge(u, v, std::move(w));
    }
  return g;
}

// Single-criterion Bellman-Ford toward a fixed target; the scalar analog of
// the front recursion, with -1 standing in for "unreachable".
std::vector<std::int64_t> classic_bf(const MultiWeightGraph& g, int target) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> d(static_cast<std::size_t>(g.node_count()), kInf);
  d[static_cast<std::size_t>(target)] = 0;
  for (int i = 1; i < g.node_count(); ++i) {
    std::vector<std::int64_t> next = d;
    for (const Arc& a : g.arcs())
      if (d[static_cast<std::size_t>(a.to)] < kInf)
        next[static_cast<std::size_t>(a.from)] =
            std::min(next[static_cast<std::size_t>(a.from)],
                     d[static_cast<std::size_t>(a.to)] + a.w[0]);
    d = std::move(next);
  }
  for (auto& x : d)
    if (x >= kInf) x = -1;
  return d;
}

}  // namespace

TEST_CASE("graph text parsing") {
  const MultiWeightGraph g = parse_graph_text(kDiamondText);
  CHECK(g.node_count() == 4);
  CHECK(g.dimension() == 2);
  CHECK(g.directed());
  REQUIRE(g.arcs().size() == 4);
  CHECK(g.arcs()[0].from == 0);
  CHECK(g.arcs()[0].to == 1);
  CHECK(g.arcs()[0].w == std::vector<std::int64_t>{1, 3});
  CHECK(g.out_arcs(0) == std::vector<int>{0, 2});

  // Comment lines and blank lines are skipped without consuming line numbers.
  const MultiWeightGraph h = parse_graph_text("# header next\n\n1 2 undirected\n0 1 7\n");
  CHECK_FALSE(h.directed());
  // Undirected edges expand to both orientations sharing the weight.
  REQUIRE(h.arcs().size() == 2);
  CHECK(h.arcs()[1].from == 1);
  CHECK(h.arcs()[1].to == 0);
  CHECK(h.arcs()[1].w == h.arcs()[0].w);
}

TEST_CASE("graph parse errors carry line numbers") {
  const auto line_of = [](const char* text) {
    try {
      parse_graph_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("2 4\n") == 1);                           // header too short
  CHECK(line_of("2 4 sideways\n") == 1);                  // bad directedness
  CHECK(line_of("2 4 directed\n0 1 1\n") == 2);           // missing weight
  CHECK(line_of("2 4 directed\n0 9 1 2\n") == 2);         // node out of range
  CHECK(line_of("2 4 directed\n0 0 1 2\n") == 2);         // self loop
  CHECK(line_of("2 4 directed\n0 1 0 2\n") == 2);         // weight below 1
  CHECK(line_of("2 4 directed\n0 x 1 2\n") == 2);         // non-integer field
  CHECK(line_of("1 4 directed\n0 1 5\n0 2 q\n") == 3);
  CHECK(line_of("") == 0);                                // missing header
}

TEST_CASE("graph JSON and text round-trips") {
  const MultiWeightGraph g = parse_graph_text(kDiamondText);
  CHECK(to_text(g) == kDiamondText);

  const MultiWeightGraph j = parse_graph_json(to_json(g));
  CHECK(to_text(j) == kDiamondText);
  CHECK_THROWS_AS(parse_graph_json("{not json"), ParseError);
  CHECK_THROWS_AS(parse_graph_json("{\"k\":2}"), ParseError);

  // Undirected graphs serialize one line per edge, not per arc.
  const MultiWeightGraph u = parse_graph_text("1 3 undirected\n0 1 4\n1 2 9\n");
  CHECK(to_text(u) == "1 3 undirected\n0 1 4\n1 2 9\n");
  CHECK(to_text(parse_graph_json(to_json(u))) == to_text(u));
}

TEST_CASE("bf_md on the diamond fixture") {
  const MultiWeightGraph g = parse_graph_text(kDiamondText);
  const BfResult r = bf_md(g, 3, Variant::AtMost);

  CHECK(r.table.final_front(0).labels() == std::vector<Label>{L({2, 6}), L({4, 2})});
  CHECK(r.table.final_front(3).labels() == std::vector<Label>{L({0, 0})});
  CHECK(r.table.front(0, 3).labels() == std::vector<Label>{L({0, 0})});
  CHECK(r.table.front(0, 0).empty());

  CHECK(decide(r.table, 0, {3, 7}));
  CHECK_FALSE(decide(r.table, 0, {3, 2}));
  CHECK_FALSE(decide(r.table, 0, {0, 0}));
  CHECK(decide(r.table, 3, {0, 0}));
  CHECK_THROWS_AS(decide(r.table, 0, {3}), ArityMismatch);

  CHECK(r.stats.p_e == 2);
  CHECK(r.stats.p_ei.size() == 4);
  CHECK_THROWS_AS(bf_md(g, 9, Variant::AtMost), std::invalid_argument);
}

TEST_CASE("single path graph accumulates its weights") {
  const MultiWeightGraph g = parse_graph_text("2 3 directed\n0 1 1 3\n1 2 1 3\n");
  const BfResult r = bf_md(g, 2, Variant::AtMost);
  CHECK(r.table.front(2, 0).labels() == std::vector<Label>{L({2, 6})});
}

TEST_CASE("brute_force_paths") {
  const MultiWeightGraph g = parse_graph_text(kDiamondText);
  CHECK(brute_force_paths(g, 0, 3).labels() == std::vector<Label>{L({2, 6}), L({4, 2})});
  CHECK(brute_force_paths(g, 2, 2).labels() == std::vector<Label>{L({0, 0})});
  CHECK(brute_force_paths(g, 3, 0).empty());
  CHECK_THROWS_AS(brute_force_paths(g, 0, 3, 3), std::invalid_argument);
}

TEST_CASE("frontier equals the path oracle on random graphs") {
  std::mt19937_64 rng(0x0A11u);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + static_cast<int>(bounded(rng, 0, 5));
    const MultiWeightGraph g = random_graph(rng, n, 2, 9);
    const BfResult r = bf_md(g, n - 1, Variant::AtMost);
    for (int s = 0; s < n; ++s)
      CHECK(r.table.final_front(s) == brute_force_paths(g, s, n - 1));
  }
}

TEST_CASE("exactly-variant union reproduces the at-most fronts") {
  std::mt19937_64 rng(0xE5ACu);
  for (int round = 0; round < 25; ++round) {
    const int n = 2 + static_cast<int>(bounded(rng, 0, 4));
    const MultiWeightGraph g = random_graph(rng, n, 2, 7);
    const BfResult at_most = bf_md(g, n - 1, Variant::AtMost);
    const BfResult exactly = bf_md(g, n - 1, Variant::Exactly);
    const RelationVector rel = RelationVector::all_less_eq(2);
    for (int i = 0; i < n; ++i)
      for (int v = 0; v < n; ++v) {
        std::vector<Label> pool;
        for (int j = 0; j <= i; ++j) {
          const auto& labels = exactly.table.front(j, v).labels();
          pool.insert(pool.end(), labels.begin(), labels.end());
        }
        CHECK(ParetoFront::from_set(std::move(pool), rel) == at_most.table.front(i, v));
      }
    // final_front on the exactly variant is that union at the last slice.
    for (int v = 0; v < n; ++v)
      CHECK(exactly.table.final_front(v) == at_most.table.final_front(v));
  }
}

TEST_CASE("at-most fronts improve monotonically") {
  std::mt19937_64 rng(0x303Eu);
  for (int round = 0; round < 20; ++round) {
    const int n = 2 + static_cast<int>(bounded(rng, 0, 4));
    const MultiWeightGraph g = random_graph(rng, n, 2, 7);
    const BfResult r = bf_md(g, n - 1, Variant::AtMost);
    for (int i = 1; i < n; ++i)
      for (int v = 0; v < n; ++v)
        for (const Label& old : r.table.front(i - 1, v).labels())
          CHECK(r.table.front(i, v).covers_label(old));
  }
}

TEST_CASE("k=1 degenerates to classic Bellman-Ford") {
  std::mt19937_64 rng(0x1D36u);
  for (int round = 0; round < 25; ++round) {
    const int n = 2 + static_cast<int>(bounded(rng, 0, 5));
    const MultiWeightGraph g = random_graph(rng, n, 1, 9);
    const BfResult r = bf_md(g, n - 1, Variant::AtMost);
    const std::vector<std::int64_t> dist = classic_bf(g, n - 1);
    CHECK(r.stats.p_e <= 1);
    for (int v = 0; v < n; ++v) {
      const ParetoFront& f = r.table.final_front(v);
      REQUIRE(f.size() <= 1);
      if (dist[static_cast<std::size_t>(v)] < 0)
        CHECK(f.empty());
      else
        CHECK(f.labels()[0][0] == dist[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("stats match a recount from the table") {
  std::mt19937_64 rng(0x57A7u);
  const MultiWeightGraph g = random_graph(rng, 6, 2, 9);
  const BfResult r = bf_md(g, 5, Variant::AtMost);
  const RunStats again = stats_from_table(r.table);
  CHECK(again.front_sizes == r.stats.front_sizes);
  CHECK(again.p_ei == r.stats.p_ei);
  CHECK(again.p_e == r.stats.p_e);
  // p_e is the max over iterations of the max over nodes.
  int top = 0;
  for (int x : r.stats.p_ei) top = std::max(top, x);
  CHECK(top == r.stats.p_e);
}

TEST_CASE("bf_md runs are schedule independent under jobs") {
  std::mt19937_64 rng(0x906Bu);
  const MultiWeightGraph g = random_graph(rng, 7, 2, 9);
  const BfResult serial = bf_md(g, 6, Variant::AtMost);
  BfOptions opt;
  opt.jobs = 4;
  const BfResult parallel = bf_md(g, 6, Variant::AtMost, opt);
  for (int i = 0; i < 7; ++i)
    for (int v = 0; v < 7; ++v) CHECK(serial.table.front(i, v) == parallel.table.front(i, v));
}

TEST_CASE("witness reconstruction") {
  const MultiWeightGraph g = parse_graph_text(kDiamondText);
  const BfResult r = bf_md(g, 3, Variant::AtMost);

  const PathWitness w = reconstruct_path(g, r.table, 0, L({2, 6}));
  CHECK(w.nodes == std::vector<int>{0, 1, 3});
  CHECK(w.arc_indices == std::vector<int>{0, 1});
  CHECK(w.total == L({2, 6}));

  const PathWitness trivial = reconstruct_path(g, r.table, 3, L({0, 0}));
  CHECK(trivial.nodes == std::vector<int>{3});
  CHECK(trivial.arc_indices.empty());

  CHECK_THROWS_AS(reconstruct_path(g, r.table, 0, L({9, 9})), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_path(g, r.table, 0, L({2, 6, 1})), ArityMismatch);

  // The exactly variant finds the label on its slice.
  const BfResult ex = bf_md(g, 3, Variant::Exactly);
  const PathWitness we = reconstruct_path(g, ex.table, 0, L({4, 2}));
  CHECK(we.nodes == std::vector<int>{0, 2, 3});
}

TEST_CASE("reconstructed walks are simple and sum to their label") {
  std::mt19937_64 rng(0x51417u);
  for (int round = 0; round < 20; ++round) {
    const int n = 2 + static_cast<int>(bounded(rng, 0, 5));
    const MultiWeightGraph g = random_graph(rng, n, 2, 9);
    const BfResult r = bf_md(g, n - 1, Variant::AtMost);
    for (int s = 0; s < n; ++s) {
      const ParetoFront front = r.table.final_front(s);
      for (const Label& label : front.labels()) {
        const PathWitness w = reconstruct_path(g, r.table, s, label);
        CHECK(w.nodes.front() == s);
        CHECK(w.nodes.back() == n - 1);
        const std::set<int> unique(w.nodes.begin(), w.nodes.end());
        CHECK(unique.size() == w.nodes.size());
        Label sum = Label::zeros(2);
        for (int ai : w.arc_indices) sum = sum + Label(std::vector<std::int64_t>(
                                                g.arcs()[static_cast<std::size_t>(ai)].w));
        CHECK(sum == label);
      }
    }
  }
}

TEST_CASE("front budget aborts oversized runs") {
  const MultiWeightGraph g = parse_graph_text(kDiamondText);
  BfOptions opt;
  opt.max_front_size = 1;
  CHECK_THROWS_AS(bf_md(g, 3, Variant::AtMost, opt), BudgetExceeded);
  opt.max_front_size = 2;
  CHECK_NOTHROW(bf_md(g, 3, Variant::AtMost, opt));
}
