#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sparsehfs/dataset.hpp"
#include "sparsehfs/graph.hpp"
#include "sparsehfs/hfs.hpp"

namespace sparsehfs {

/// Fraction of agreeing entries, optionally restricted to `mask` indices.
double accuracy(const ClassVector& pred, const ClassVector& truth,
                const std::vector<NodeId>* mask = nullptr);

/// Extremes of x^T L_H x / x^T L_G x over mean-zero Gaussian probe vectors.
/// A probe-based lower bound on spectral-similarity violation, not a proof.
/// Probes with x^T L_G x <= 1e-14 are resampled (at most 100 retries).
std::pair<double, double> spectral_similarity(const WeightedGraph& g, const WeightedGraph& h,
                                              int probes, std::uint64_t seed);

/// Distinct-edge count quotient |H| / |G|.
double edge_ratio(const WeightedGraph& h, const WeightedGraph& g);

/// Every node takes the label of its Euclidean-nearest labeled node; ties
/// break toward the lower node index.
ClassVector baseline_1nn(const Dataset& data, const LabelAssignment& labels);

/// Uniform sample of s nodes (labeled nodes always included), knn graph on
/// the sample, stable_hfs there, and nearest-sampled-node assignment outside.
/// A disconnected sample subgraph falls back to the largest labeled component
/// and sets *warned.
ClassVector baseline_subsampling(const Dataset& data, const LabelAssignment& labels,
                                 std::int64_t s, int k, double gamma, std::uint64_t seed,
                                 const SolverConfig& cfg = {}, bool* warned = nullptr);

struct BoundInputs {
  std::int64_t l = 0;
  std::int64_t u = 0;
  double gamma = 0.0;
  double epsilon = 0.0;
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  double bound_M = 0.0;
  double c = 0.0;
  double delta = 0.0;
  /// Empirical error of the exact solution, the R-hat term.
  double empirical_error = 0.0;
};

struct BoundResult {
  double beta = 0.0;
  double bound = 0.0;
  double pi_lu = 0.0;
};

/// Generalization-bound evaluator (diagnostic only, never gates solutions):
///   bound = R_hat + l^2 g^2 lambda_n^2 M^2 eps^2 / (l g (1-eps) lambda2 - 1)^4
///           + beta + (2 beta + c^2 (l+u)/(l u)) sqrt(pi(l,u) ln(1/delta) / 2)
/// with pi(l,u) = lu/(l+u-0.5) * 2max(l,u)/(2max(l,u)-1) and
///   beta = 1.5 M sqrt(l)/(l g (1-eps) lambda2 - 1)^2 + 4M/(l g (1-eps) lambda2 - 1).
/// lambda2 is the smallest nonzero Laplacian eigenvalue. Throws
/// bound_undefined_error when l g (1-eps) lambda2 <= 1.
BoundResult theorem1_bound(const BoundInputs& in);

class bound_undefined_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct EigenExtremes {
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  bool disconnected = false;
};

/// Smallest-nonzero and largest Laplacian eigenvalues. Dense path below the
/// dense node limit; shifted power iteration with deflation of the all-ones
/// vector above it (relative tolerance ~1e-6, diagnostics-grade).
EigenExtremes graph_eigen_extremes(const WeightedGraph& g);

/// The power-iteration path used above the dense limit, callable at any size.
EigenExtremes graph_eigen_extremes_iterative(const WeightedGraph& g);

}  // namespace sparsehfs
