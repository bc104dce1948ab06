#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sparsehfs/errors.hpp"

namespace sparsehfs {

using NodeId = std::uint32_t;

/// Undirected edge with positive weight. Canonical form has u < v.
struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Packs a canonical (u,v) pair into a sortable 64-bit key.
inline std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

/// Immutable weighted undirected graph over nodes [0, n).
///
/// Parallel input edges are merged by weight summation at construction; the
/// Laplacian of the merged simple graph equals the multigraph's. All accessors
/// are read-only and safe to call concurrently.
class WeightedGraph {
 public:
  /// Canonicalizes, validates and merges `edges`. Throws graph_error on
  /// self-loops, out-of-range endpoints or nonpositive/nonfinite weights.
  WeightedGraph(NodeId n, std::vector<WeightedEdge> edges);

  NodeId num_nodes() const { return n_; }
  /// Number of distinct edges after merging.
  std::size_t num_edges() const { return edges_.size(); }
  /// Canonical edge list, sorted by (u, v).
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  /// Weighted degree vector (the diagonal of D).
  const std::vector<double>& degrees() const { return degree_; }
  double max_degree() const { return max_degree_; }
  bool is_connected() const { return connected_; }

  /// y = (D - A) x. Throws dimension_error if |x| != n.
  Eigen::VectorXd laplacian_apply(const Eigen::VectorXd& x) const;
  void laplacian_apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;

  /// x^T L x = sum_e w_e (x_u - x_v)^2, evaluated over the edge list.
  double quadratic_form(const Eigen::VectorXd& x) const;

  std::span<const NodeId> neighbors(NodeId i) const {
    return {adj_.data() + offsets_[i], adj_.data() + offsets_[i + 1]};
  }
  std::span<const double> neighbor_weights(NodeId i) const {
    return {adj_weight_.data() + offsets_[i], adj_weight_.data() + offsets_[i + 1]};
  }

  /// Index into edges() of the canonical (u,v) edge, if present.
  std::optional<std::size_t> edge_index(NodeId u, NodeId v) const;

 private:
  NodeId n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<double> degree_;
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<double> adj_weight_;
  double max_degree_ = 0.0;
  bool connected_ = false;
};

/// Convenience wrapper matching the construction contract.
inline WeightedGraph build_graph(NodeId n, std::vector<WeightedEdge> edges) {
  return WeightedGraph(n, std::move(edges));
}

/// Labels each node with a component id in [0, count); returns (labels, count).
std::pair<std::vector<NodeId>, NodeId> connected_components(const WeightedGraph& g);

}  // namespace sparsehfs
