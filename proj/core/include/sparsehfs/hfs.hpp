#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sparsehfs/graph.hpp"
#include "sparsehfs/solver.hpp"
#include "sparsehfs/sparsifier.hpp"

namespace sparsehfs {

using ClassVector = std::vector<std::int8_t>;

/// Partial labeling y_S over node indices. Binary classification uses
/// values in {-1,+1}; bound_M is the label magnitude bound.
struct LabelAssignment {
  std::map<NodeId, double> labeled;
  NodeId n = 0;
  double bound_M = 1.0;

  std::size_t count() const { return labeled.size(); }
  void validate() const;
};

struct HfsSolution {
  Eigen::VectorXd f;
  double mu = 0.0;
  double gamma = 0.0;
  double residual = 0.0;
  int iterations = 0;
  /// Label mean subtracted upstream (0 when labels were used as given).
  double centered_mean = 0.0;
};

/// Subtracts the labeled-node mean from every labeled value; unlabeled nodes
/// are untouched. Returns the centered assignment and the mean.
std::pair<LabelAssignment, double> center_labels(const LabelAssignment& labels);

/// Laplacian-regularized least-squares with the centering offset mu: returns
/// the f that minimizes (1/l)(f-y)^T I_S (f-y) + gamma f^T L f over centered
/// functions, equivalently f = z1 - mu z2 for (gamma l L + I_S) z1 = y_S,
/// (gamma l L + I_S) z2 = 1 and mu = (z1^T 1)/(z2^T 1). Solved as one
/// re-centered preconditioned CG run on the compressed SPD system; mu is
/// recovered from the optimality relation M f = y_S - mu 1.
HfsSolution stable_hfs(const WeightedGraph& g, const LabelAssignment& labels, double gamma,
                       const SolverConfig& cfg = {});

/// sign(f_i); ties (f_i == 0) break to +1.
ClassVector predict_classes(const HfsSolution& sol);

/// Dense ground truth for small graphs: builds P_F = L L^+ explicitly and
/// solves the centered problem through the pseudoinverse of the compression
/// P_F (gamma l L + I_S) P_F. Guarded to n <= 2000.
HfsSolution hfs_dense_oracle(const WeightedGraph& g, const LabelAssignment& labels, double gamma);

struct SparseHfsResult {
  HfsSolution solution;
  SparsifierState sparsifier;
  StreamDiagnostics stream;
};

/// The end-to-end pipeline: stream-sparsify the edge stream, center the
/// labels, then run stable_hfs on the sparsifier.
SparseHfsResult sparse_hfs(EdgeSource& stream, const LabelAssignment& labels, double gamma,
                           const SparsifierParams& params, const SolverConfig& cfg,
                           std::uint64_t seed);

/// Labels file: one `node_id<TAB>value` per line, `#` comments.
LabelAssignment load_labels(const std::string& path, NodeId n);
void write_labels(const std::string& path, const LabelAssignment& labels);

/// Solution file: `node_id<TAB>f_value<TAB>predicted_class` per line.
void write_solution(const std::string& path, const HfsSolution& sol);

}  // namespace sparsehfs
