#pragma once

#include <Eigen/Dense>

#include "sparsehfs/graph.hpp"

namespace sparsehfs {

/// Guard for dense materialization paths.
inline constexpr NodeId kDenseNodeLimit = 2000;

Eigen::MatrixXd dense_laplacian(const WeightedGraph& g);

/// Moore-Penrose pseudoinverse of a symmetric PSD matrix via
/// eigendecomposition; eigenvalues below cutoff_rel * lambda_max are treated
/// as zero.
Eigen::MatrixXd pinv_psd(const Eigen::MatrixXd& m, double cutoff_rel = 1e-10);

/// All Laplacian eigenvalues, ascending. Throws dimension_error above the
/// dense node limit.
Eigen::VectorXd dense_laplacian_eigenvalues(const WeightedGraph& g);

}  // namespace sparsehfs
