#include <benchmark/benchmark.h>

#include "sparsehfs/datagen.hpp"
#include "sparsehfs/knn.hpp"

using namespace sparsehfs;

static void BM_KnnBuild(benchmark::State& state) {
  GeneratedData gen = generate_four_clusters(state.range(0), 1);
  KnnConfig cfg;
  cfg.k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_knn_graph(gen.data, cfg).size());
}
BENCHMARK(BM_KnnBuild)->Args({2000, 16})->Args({12100, 100})->Unit(benchmark::kMillisecond);

static void BM_Datagen(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_four_clusters(state.range(0), seed++).data.size());
}
BENCHMARK(BM_Datagen)->Arg(12100)->Unit(benchmark::kMillisecond);
