#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "sparsehfs/hfs.hpp"
#include "sparsehfs/resistance.hpp"
#include "sparsehfs/solver.hpp"

using namespace sparsehfs;

static void BM_SolveLaplacian(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  WeightedGraph g(n, bench::random_graph_edges(n, 8 * n, 4));
  Eigen::VectorXd b = Eigen::VectorXd::Random(n);
  SolverConfig cfg;
  cfg.rel_tolerance = 1e-6;
  for (auto _ : state) benchmark::DoNotOptimize(solve_laplacian(g, b, cfg));
}
BENCHMARK(BM_SolveLaplacian)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_EffectiveResistanceExact(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  WeightedGraph g(n, bench::random_graph_edges(n, 8 * n, 5));
  SolverConfig cfg;
  cfg.rel_tolerance = 1e-6;
  for (auto _ : state)
    benchmark::DoNotOptimize(effective_resistance_exact(g, 0, n / 2, cfg).value);
}
BENCHMARK(BM_EffectiveResistanceExact)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_StableHfs(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  WeightedGraph g(n, bench::random_graph_edges(n, 8 * n, 6));
  LabelAssignment labels;
  labels.n = n;
  labels.labeled[0] = 1.0;
  labels.labeled[n / 3] = 1.0;
  labels.labeled[n / 2] = -1.0;
  labels.labeled[n - 1] = -1.0;
  SolverConfig cfg;
  cfg.rel_tolerance = 1e-6;
  for (auto _ : state) benchmark::DoNotOptimize(stable_hfs(g, labels, 1.0, cfg).f.sum());
}
BENCHMARK(BM_StableHfs)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
