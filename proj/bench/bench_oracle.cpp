// Serial vs OpenMP partition search, and check_structure scaling.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "wnc/detect.hpp"
#include "wnc/gen.hpp"
#include "wnc/oracle.hpp"

namespace {

wnc::SignedGraph dense_random(std::size_t n) {
  wnc::GenConfig cfg;
  cfg.seed = 5;
  cfg.n = n;
  cfg.m = n * (n - 1) / 3;
  cfg.negative_fraction = 0.4;
  return wnc::random_signed_graph(cfg);
}

void BM_PartitionSerial(benchmark::State& state) {
  const auto g = dense_random(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnc::min_disagreement_partition_serial(g, 12).q);
  }
}

void BM_PartitionParallel(benchmark::State& state) {
  const auto g = dense_random(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(threads);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wnc::min_disagreement_partition(g, 12).q);
  }
  omp_set_num_threads(saved);
  state.counters["threads"] = threads;
}

void BM_CheckStructure(benchmark::State& state) {
  wnc::GenConfig cfg;
  cfg.mode = wnc::GenMode::structured;
  cfg.seed = 9;
  cfg.n = static_cast<std::size_t>(state.range(0));
  cfg.m = 5 * cfg.n;
  const auto g = wnc::structured_signed_graph(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(wnc::check_structure(g).verdict());
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_PartitionSerial)->Arg(8)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartitionParallel)
    ->ArgsProduct({{8, 10, 11}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_CheckStructure)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

BENCHMARK_MAIN();
