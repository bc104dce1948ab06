#pragma once

#include <cstdint>
#include <vector>

#include "sparsehfs/graph.hpp"
#include "sparsehfs/solver.hpp"

namespace sparsehfs {

struct ResistanceEstimate {
  NodeId u = 0;
  NodeId v = 0;
  double value = 0.0;
  /// Declared multiplicative accuracy: 1/a <= est/exact <= a. Exact
  /// computations report 1.
  double accuracy_factor = 1.0;
};

/// R(u,v) = (chi_u - chi_v)^T L^+ (chi_u - chi_v), one Laplacian solve.
/// (u,v) need not be an edge of g. Requires a connected graph.
ResistanceEstimate effective_resistance_exact(const WeightedGraph& g, NodeId u, NodeId v,
                                              const SolverConfig& cfg = {});

enum class SketchKind {
  /// Q has iid +-1/sqrt(dim) entries (Johnson-Lindenstrauss).
  rademacher,
  /// Test hook: Q = I, so Z = W^{1/2} B L^+ and every estimate is exact
  /// (m solves). sketch_dim is ignored.
  identity,
};

/// Default sketch dimension ceil(C ln(n) / (1 - 1/alpha)^2), capped at m.
int default_sketch_dim(NodeId n, double alpha, double constant, std::size_t m);

/// Resistance estimates for every edge of g via the sketch
/// Z = Q W^{1/2} B L^+, one solve_laplacian call per sketch row. Row r's
/// randomness is derived from (seed, r), so rows can be computed in any order
/// or concurrently with identical results. With sketch_dim = 0 the default
/// dimension is used; estimates then satisfy 1/alpha <= est/exact <= alpha
/// for all edges simultaneously with high probability.
///
/// Returned estimates are aligned with g.edges().
std::vector<ResistanceEstimate> estimate_all_resistances(
    const WeightedGraph& g, double alpha, int sketch_dim, const SolverConfig& cfg,
    std::uint64_t seed, SketchKind kind = SketchKind::rademacher, double sketch_constant = 24.0);

}  // namespace sparsehfs
