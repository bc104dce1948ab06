#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "sparsehfs/graph.hpp"

using namespace sparsehfs;

static void BM_BuildGraph(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  auto edges = bench::random_graph_edges(n, 8 * n, 1);
  for (auto _ : state) {
    WeightedGraph g(n, edges);
    benchmark::DoNotOptimize(g.num_edges());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(edges.size()));
}
BENCHMARK(BM_BuildGraph)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_LaplacianApply(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  WeightedGraph g(n, bench::random_graph_edges(n, 8 * n, 2));
  Eigen::VectorXd x = Eigen::VectorXd::Random(n), y(n);
  for (auto _ : state) {
    g.laplacian_apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_LaplacianApply)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_QuadraticForm(benchmark::State& state) {
  const NodeId n = static_cast<NodeId>(state.range(0));
  WeightedGraph g(n, bench::random_graph_edges(n, 8 * n, 3));
  Eigen::VectorXd x = Eigen::VectorXd::Random(n);
  for (auto _ : state) benchmark::DoNotOptimize(g.quadratic_form(x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_QuadraticForm)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
