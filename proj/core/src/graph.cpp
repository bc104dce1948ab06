#include "sparsehfs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sparsehfs {

WeightedGraph::WeightedGraph(NodeId n, std::vector<WeightedEdge> edges) : n_(n) {
  if (n == 0) throw graph_error("graph must have at least one node");

  for (auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw graph_error("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") with n=" + std::to_string(n));
    if (e.u == e.v)
      throw graph_error("self-loop rejected at node " + std::to_string(e.u));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw graph_error("edge weight must be positive and finite");
    if (e.u > e.v) std::swap(e.u, e.v);
  }

  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return edge_key(a.u, a.v) < edge_key(b.u, b.v);
  });

  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().weight += e.weight;
    } else {
      edges_.push_back(e);
    }
  }
  edges_.shrink_to_fit();

  degree_.assign(n_, 0.0);
  std::vector<std::uint64_t> counts(n_ + 1, 0);
  for (const auto& e : edges_) {
    degree_[e.u] += e.weight;
    degree_[e.v] += e.weight;
    ++counts[e.u + 1];
    ++counts[e.v + 1];
  }
  max_degree_ = degree_.empty() ? 0.0 : *std::max_element(degree_.begin(), degree_.end());

  offsets_.assign(n_ + 1, 0);
  for (NodeId i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + counts[i + 1];
  adj_.resize(2 * edges_.size());
  adj_weight_.resize(2 * edges_.size());
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adj_[cursor[e.u]] = e.v;
    adj_weight_[cursor[e.u]++] = e.weight;
    adj_[cursor[e.v]] = e.u;
    adj_weight_[cursor[e.v]++] = e.weight;
  }

  // BFS from node 0; single pass at construction, cached thereafter.
  std::vector<NodeId> stack{0};
  std::vector<bool> seen(n_, false);
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId i = stack.back();
    stack.pop_back();
    for (NodeId j : neighbors(i)) {
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  connected_ = (reached == n_);
}

Eigen::VectorXd WeightedGraph::laplacian_apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y(n_);
  laplacian_apply(x, y);
  return y;
}

void WeightedGraph::laplacian_apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
  if (x.size() != static_cast<Eigen::Index>(n_))
    throw dimension_error("laplacian_apply: vector length " + std::to_string(x.size()) +
                          " != n " + std::to_string(n_));
  y.resize(n_);
#pragma omp parallel for schedule(static) if (adj_.size() > 100000)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_); ++i) {
    double acc = degree_[i] * x[i];
    const std::uint64_t lo = offsets_[i], hi = offsets_[i + 1];
    for (std::uint64_t t = lo; t < hi; ++t) acc -= adj_weight_[t] * x[adj_[t]];
    y[i] = acc;
  }
}

double WeightedGraph::quadratic_form(const Eigen::VectorXd& x) const {
  if (x.size() != static_cast<Eigen::Index>(n_))
    throw dimension_error("quadratic_form: vector length " + std::to_string(x.size()) +
                          " != n " + std::to_string(n_));
  double total = 0.0;
  const std::int64_t m = static_cast<std::int64_t>(edges_.size());
#pragma omp parallel for schedule(static) reduction(+ : total) if (m > 100000)
  for (std::int64_t e = 0; e < m; ++e) {
    const double d = x[edges_[e].u] - x[edges_[e].v];
    total += edges_[e].weight * d * d;
  }
  return total;
}

std::optional<std::size_t> WeightedGraph::edge_index(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  const std::uint64_t key = edge_key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                             [](const WeightedEdge& e, std::uint64_t k) {
                               return edge_key(e.u, e.v) < k;
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::pair<std::vector<NodeId>, NodeId> connected_components(const WeightedGraph& g) {
  const NodeId n = g.num_nodes();
  constexpr NodeId kUnset = static_cast<NodeId>(-1);
  std::vector<NodeId> label(n, kUnset);
  std::vector<NodeId> stack;
  NodeId count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId i = stack.back();
      stack.pop_back();
      for (NodeId j : g.neighbors(i)) {
        if (label[j] == kUnset) {
          label[j] = count;
          stack.push_back(j);
        }
      }
    }
    ++count;
  }
  return {std::move(label), count};
}

}  // namespace sparsehfs
