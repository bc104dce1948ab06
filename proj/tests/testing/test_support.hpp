#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sparsehfs/graph.hpp"
#include "sparsehfs/hfs.hpp"

namespace sparsehfs::testsupport {

/// Random spanning tree plus `extra` random edges; connected by construction.
/// Weighted draws weights from [0.5, 2], otherwise all weights are 1.
std::vector<WeightedEdge> random_connected_edges(NodeId n, std::size_t extra, std::uint64_t seed,
                                                 bool weighted = true);

WeightedGraph random_connected_graph(NodeId n, std::size_t extra, std::uint64_t seed,
                                     bool weighted = true);

/// Erdos-Renyi-style graph with roughly target_m edges plus a spanning tree.
WeightedGraph random_dense_graph(NodeId n, std::size_t target_m, std::uint64_t seed,
                                 bool weighted = false);

/// Independent dense Laplacian built straight from edge triples (no shared
/// code with WeightedGraph's adjacency machinery).
Eigen::MatrixXd naive_dense_laplacian(NodeId n, const std::vector<WeightedEdge>& edges);

/// L^+ b through a dense eigendecomposition.
Eigen::VectorXd dense_pinv_solve(const Eigen::MatrixXd& lap, const Eigen::VectorXd& b);

/// All-pairs exact effective resistances via dense pseudoinverse.
Eigen::MatrixXd dense_resistance_matrix(NodeId n, const std::vector<WeightedEdge>& edges);

Eigen::VectorXd random_vector(NodeId n, std::uint64_t seed);

/// l distinct labeled nodes with values in {-1,+1} (both classes present for
/// l >= 2).
LabelAssignment random_labels(NodeId n, std::size_t l, std::uint64_t seed);

/// Eq.-style objective (1/l)(f-y)^T I_S (f-y) + gamma f^T L f, evaluated
/// densely.
double hfs_objective(const WeightedGraph& g, const LabelAssignment& labels, double gamma,
                     const Eigen::VectorXd& f);

/// Independent minimizer of the centered objective: projected steepest
/// descent with exact line search. Ground truth for the dense oracle.
Eigen::VectorXd hfs_gradient_descent(const WeightedGraph& g, const LabelAssignment& labels,
                                     double gamma, int iterations);

}  // namespace sparsehfs::testsupport
