#include "testing/test_support.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sparsehfs/rng.hpp"

namespace sparsehfs::testsupport {

std::vector<WeightedEdge> random_connected_edges(NodeId n, std::size_t extra, std::uint64_t seed,
                                                 bool weighted) {
  auto rng = make_rng(seed, std::uint64_t{0x7e57});
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::vector<WeightedEdge> edges;
  for (NodeId i = 1; i < n; ++i) {
    std::uniform_int_distribution<NodeId> parent(0, i - 1);
    edges.push_back({parent(rng), i, weighted ? weight(rng) : 1.0});
  }
  std::uniform_int_distribution<NodeId> any(0, n - 1);
  for (std::size_t e = 0; e < extra; ++e) {
    NodeId u = any(rng), v = any(rng);
    if (u == v) continue;
    edges.push_back({std::min(u, v), std::max(u, v), weighted ? weight(rng) : 1.0});
  }
  return edges;
}

WeightedGraph random_connected_graph(NodeId n, std::size_t extra, std::uint64_t seed,
                                     bool weighted) {
  return WeightedGraph(n, random_connected_edges(n, extra, seed, weighted));
}

WeightedGraph random_dense_graph(NodeId n, std::size_t target_m, std::uint64_t seed,
                                 bool weighted) {
  auto rng = make_rng(seed, std::uint64_t{0xd47a});
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::set<std::uint64_t> seen;
  std::vector<WeightedEdge> edges;
  for (NodeId i = 1; i < n; ++i) {
    std::uniform_int_distribution<NodeId> parent(0, i - 1);
    NodeId p = parent(rng);
    seen.insert(edge_key(p, i));
    edges.push_back({p, i, weighted ? weight(rng) : 1.0});
  }
  std::uniform_int_distribution<NodeId> any(0, n - 1);
  while (edges.size() < target_m) {
    NodeId u = any(rng), v = any(rng);
    if (u == v) continue;
    if (!seen.insert(edge_key(u, v)).second) continue;
    edges.push_back({std::min(u, v), std::max(u, v), weighted ? weight(rng) : 1.0});
  }
  return WeightedGraph(n, std::move(edges));
}

Eigen::MatrixXd naive_dense_laplacian(NodeId n, const std::vector<WeightedEdge>& edges) {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : edges) {
    l(e.u, e.u) += e.weight;
    l(e.v, e.v) += e.weight;
    l(e.u, e.v) -= e.weight;
    l(e.v, e.u) -= e.weight;
  }
  return l;
}

Eigen::VectorXd dense_pinv_solve(const Eigen::MatrixXd& lap, const Eigen::VectorXd& b) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(lap);
  const Eigen::VectorXd& vals = eig.eigenvalues();
  const Eigen::MatrixXd& vecs = eig.eigenvectors();
  const double cutoff = 1e-10 * vals.cwiseAbs().maxCoeff();
  Eigen::VectorXd coeffs = vecs.transpose() * b;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    coeffs[i] = vals[i] > cutoff ? coeffs[i] / vals[i] : 0.0;
  return vecs * coeffs;
}

Eigen::MatrixXd dense_resistance_matrix(NodeId n, const std::vector<WeightedEdge>& edges) {
  Eigen::MatrixXd lap = naive_dense_laplacian(n, edges);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(lap);
  const Eigen::VectorXd& vals = eig.eigenvalues();
  const Eigen::MatrixXd& vecs = eig.eigenvectors();
  const double cutoff = 1e-10 * vals.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals[i] > cutoff) inv[i] = 1.0 / vals[i];
  Eigen::MatrixXd pinv = vecs * inv.asDiagonal() * vecs.transpose();
  Eigen::MatrixXd r(n, n);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j) r(i, j) = pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j);
  return r;
}

Eigen::VectorXd random_vector(NodeId n, std::uint64_t seed) {
  auto rng = make_rng(seed, std::uint64_t{0x0ec7});
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd x(n);
  for (NodeId i = 0; i < n; ++i) x[i] = normal(rng);
  return x;
}

LabelAssignment random_labels(NodeId n, std::size_t l, std::uint64_t seed) {
  auto rng = make_rng(seed, std::uint64_t{0x1abe1});
  std::vector<NodeId> ids(n);
  for (NodeId i = 0; i < n; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  LabelAssignment labels;
  labels.n = n;
  labels.bound_M = 1.0;
  for (std::size_t i = 0; i < l && i < ids.size(); ++i) {
    double value = (i % 2 == 0) ? 1.0 : -1.0;
    if (l == 1) value = 1.0;
    labels.labeled[ids[i]] = value;
  }
  return labels;
}

double hfs_objective(const WeightedGraph& g, const LabelAssignment& labels, double gamma,
                     const Eigen::VectorXd& f) {
  double data_term = 0.0;
  for (const auto& [id, y] : labels.labeled) {
    const double d = f[id] - y;
    data_term += d * d;
  }
  return data_term / static_cast<double>(labels.count()) + gamma * g.quadratic_form(f);
}

Eigen::VectorXd hfs_gradient_descent(const WeightedGraph& g, const LabelAssignment& labels,
                                     double gamma, int iterations) {
  const NodeId n = g.num_nodes();
  const double l = static_cast<double>(labels.count());
  Eigen::VectorXd y_s = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd mask = Eigen::VectorXd::Zero(n);
  for (const auto& [id, y] : labels.labeled) {
    y_s[id] = y;
    mask[id] = 1.0;
  }
  // grad J = (2/l) I_S (f - y) + 2 gamma L f; the objective is quadratic with
  // Hessian H = (2/l) I_S + 2 gamma L, so the exact step along d = -grad_proj
  // is t = d.d / d.H d. Projection keeps iterates centered.
  Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXd grad =
        (2.0 / l) * (mask.array() * (f - y_s).array()).matrix() + 2.0 * gamma * g.laplacian_apply(f);
    grad.array() -= grad.mean();
    const double gg = grad.squaredNorm();
    if (gg < 1e-30) break;
    Eigen::VectorXd hd =
        (2.0 / l) * (mask.array() * grad.array()).matrix() + 2.0 * gamma * g.laplacian_apply(grad);
    const double dhd = grad.dot(hd);
    if (!(dhd > 0.0)) break;
    f -= (gg / dhd) * grad;
    f.array() -= f.mean();
  }
  return f;
}

}  // namespace sparsehfs::testsupport
