#pragma once

#include <random>
#include <set>
#include <vector>

#include "sparsehfs/graph.hpp"
#include "sparsehfs/rng.hpp"

namespace bench {

inline std::vector<sparsehfs::WeightedEdge> random_graph_edges(sparsehfs::NodeId n,
                                                               std::size_t target_m,
                                                               std::uint64_t seed) {
  using sparsehfs::NodeId;
  auto rng = sparsehfs::make_rng(seed);
  std::vector<sparsehfs::WeightedEdge> edges;
  std::set<std::uint64_t> seen;
  for (NodeId i = 1; i < n; ++i) {
    std::uniform_int_distribution<NodeId> parent(0, i - 1);
    NodeId p = parent(rng);
    seen.insert(sparsehfs::edge_key(p, i));
    edges.push_back({p, i, 1.0});
  }
  std::uniform_int_distribution<NodeId> any(0, n - 1);
  while (edges.size() < target_m) {
    NodeId u = any(rng), v = any(rng);
    if (u == v || !seen.insert(sparsehfs::edge_key(u, v)).second) continue;
    edges.push_back({std::min(u, v), std::max(u, v), 1.0});
  }
  return edges;
}

}  // namespace bench
