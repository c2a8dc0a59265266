// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "edgeideal/corpus.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/suite.hpp"

using namespace edgeideal;

namespace {

Graph bench_graph(int n) {
  GeneratorSpec spec;
  spec.family = Family::gnp;
  spec.n = n;
  spec.seed = 17;
  return generate(spec);
}

void BM_BettiSerial(benchmark::State& state) {
  const auto ideal = ideal_of_graph(bench_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti_table_serial(ideal, Field::rationals()));
}

void BM_BettiParallel(benchmark::State& state) {
  const auto ideal = ideal_of_graph(bench_graph(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(hochster_betti_table(ideal, Field::rationals(), {}, Execution::parallel));
}

std::vector<CorpusEntry> small_corpus() {
  std::vector<CorpusEntry> entries;
  for (std::uint64_t mask = 0; mask < 1024; mask += 7) entries.push_back({"g" + std::to_string(mask), labeled_graph(5, mask)});
  return entries;
}

void BM_SuiteSerial(benchmark::State& state) {
  const auto entries = small_corpus();
  VerifyOptions options;
  options.execution = Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(verify_corpus(entries, options));
}

void BM_SuiteParallel(benchmark::State& state) {
  const auto entries = small_corpus();
  VerifyOptions options;
  options.execution = Execution::parallel;
  for (auto _ : state) benchmark::DoNotOptimize(verify_corpus(entries, options));
}

}  // namespace

BENCHMARK(BM_BettiSerial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiParallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
