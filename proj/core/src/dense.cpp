#include "sparsehfs/dense.hpp"

#include <string>

#include "sparsehfs/errors.hpp"

namespace sparsehfs {

Eigen::MatrixXd dense_laplacian(const WeightedGraph& g) {
  const NodeId n = g.num_nodes();
  if (n > kDenseNodeLimit)
    throw dimension_error("dense_laplacian: n=" + std::to_string(n) + " exceeds dense limit " +
                          std::to_string(kDenseNodeLimit));
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    l(e.u, e.u) += e.weight;
    l(e.v, e.v) += e.weight;
    l(e.u, e.v) -= e.weight;
    l(e.v, e.u) -= e.weight;
  }
  return l;
}

Eigen::MatrixXd pinv_psd(const Eigen::MatrixXd& m, double cutoff_rel) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  const Eigen::VectorXd& vals = eig.eigenvalues();
  const Eigen::MatrixXd& vecs = eig.eigenvectors();
  const double lambda_max = vals.cwiseAbs().maxCoeff();
  const double cutoff = cutoff_rel * lambda_max;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals[i] > cutoff) inv[i] = 1.0 / vals[i];
  }
  return vecs * inv.asDiagonal() * vecs.transpose();
}

Eigen::VectorXd dense_laplacian_eigenvalues(const WeightedGraph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense_laplacian(g), Eigen::EigenvaluesOnly);
  return eig.eigenvalues();
}

}  // namespace sparsehfs
