#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "sparsehfs/edge_list_io.hpp"
#include "sparsehfs/sparsifier.hpp"

using namespace sparsehfs;

static void BM_StreamSparsify(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  auto edges = bench::random_graph_edges(n, 20 * n, 7);
  SparsifierParams params;
  params.epsilon = 0.5;
  params.n = n;
  params.sketch_dim = 16;
  params.block_size = static_cast<std::int64_t>(edges.size() / 4);
  params.resistance_tolerance = 1e-4;
  SolverConfig cfg;
  cfg.rel_tolerance = 1e-6;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    VectorEdgeSource src(n, edges);
    benchmark::DoNotOptimize(stream_sparsify(src, params, cfg, seed++).distinct_edges());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(edges.size()));
}
BENCHMARK(BM_StreamSparsify)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_SparsifyStepExact(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  auto edges = bench::random_graph_edges(n, 10 * n, 8);
  SparsifierParams params;
  params.epsilon = 0.5;
  params.n = n;
  params.resistance = ResistanceMode::exact;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SparsifierState fresh(n);
    benchmark::DoNotOptimize(
        sparsify_step(fresh, edges, params, {}, seed++).distinct_edges());
  }
}
BENCHMARK(BM_SparsifyStepExact)->Arg(200)->Unit(benchmark::kMillisecond);
