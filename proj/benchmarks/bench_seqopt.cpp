// Microbenchmarks for the hot paths: triangle construction, front
// maintenance, and the label-correcting solver.

#include <benchmark/benchmark.h>

#include <seqopt/bellman_ford.hpp>
#include <seqopt/numbers.hpp>
#include <seqopt/pareto.hpp>
#include <seqopt/rng.hpp>
#include <seqopt/simulate.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace {

using namespace seqopt;

void BM_build_table(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_table(k, n));
}
BENCHMARK(BM_build_table)->Args({1, 50})->Args({2, 50})->Args({4, 100});

void BM_explicit_value(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const unsigned m = n / 2;
  for (auto _ : state) benchmark::DoNotOptimize(explicit_value(2, n, m));
}
BENCHMARK(BM_explicit_value)->Arg(10)->Arg(16);

std::vector<Label> random_labels(std::size_t count, std::int64_t hi) {
  std::mt19937_64 rng(0xBE7Cu);
  std::vector<Label> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(Label({bounded(rng, 1, hi), bounded(rng, 1, hi)}));
  return out;
}

void BM_front_from_set(benchmark::State& state) {
  const auto labels = random_labels(static_cast<std::size_t>(state.range(0)), 10000);
  const RelationVector rel = RelationVector::all_less_eq(2);
  for (auto _ : state) {
    auto copy = labels;
    benchmark::DoNotOptimize(ParetoFront::from_set(std::move(copy), rel));
  }
}
BENCHMARK(BM_front_from_set)->Arg(100)->Arg(1000)->Arg(10000);

void BM_front_insert(benchmark::State& state) {
  const auto labels = random_labels(static_cast<std::size_t>(state.range(0)), 10000);
  const RelationVector rel = RelationVector::all_less_eq(2);
  for (auto _ : state) {
    ParetoFront front(rel);
    for (const Label& label : labels) front.insert(label);
    benchmark::DoNotOptimize(front);
  }
}
BENCHMARK(BM_front_insert)->Arg(100)->Arg(1000)->Arg(10000);

void BM_bf_md(benchmark::State& state) {
  ExperimentConfig c;
  c.k = static_cast<unsigned>(state.range(0));
  c.n = static_cast<int>(state.range(1));
  c.w_hi = 1000;
  c.seed = 7;
  const MultiWeightGraph g = gen_graph(c, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(bf_md(g, c.n - 1, Variant::AtMost));
}
BENCHMARK(BM_bf_md)->Args({2, 12})->Args({2, 20})->Args({3, 12});

}  // namespace

BENCHMARK_MAIN();
