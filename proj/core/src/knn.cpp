#include "sparsehfs/knn.hpp"

#include <algorithm>
#include <cmath>

#include "sparsehfs/errors.hpp"

namespace sparsehfs {

std::vector<WeightedEdge> build_knn_graph(const Dataset& data, const KnnConfig& cfg) {
  const NodeId n = data.size();
  if (n < 2) throw config_error("knn: need at least two points");
  if (cfg.k < 1 || cfg.k >= static_cast<int>(n))
    throw config_error("knn: k must satisfy 1 <= k < n");
  if (cfg.mode == KnnWeightMode::exponential && !(cfg.sigma2 > 0.0))
    throw config_error("knn: exponential mode requires sigma2 > 0");

  const int k = cfg.k;
  const Eigen::MatrixXd& pts = data.points;
  std::vector<NodeId> nbr(static_cast<std::size_t>(n) * k);

#pragma omp parallel
  {
    std::vector<std::pair<double, NodeId>> cand(n - 1);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      std::size_t t = 0;
      for (NodeId j = 0; j < n; ++j) {
        if (j == static_cast<NodeId>(i)) continue;
        const double d2 = (pts.row(i) - pts.row(j)).squaredNorm();
        cand[t++] = {d2, j};
      }
      // (distance, index) pairs order ties by index.
      std::nth_element(cand.begin(), cand.begin() + (k - 1), cand.end());
      std::sort(cand.begin(), cand.begin() + k);
      for (int t2 = 0; t2 < k; ++t2) nbr[static_cast<std::size_t>(i) * k + t2] = cand[t2].second;
    }
  }

  // Canonical directed pairs; a key present twice is a mutual neighbor pair.
  std::vector<std::uint64_t> keys;
  keys.reserve(static_cast<std::size_t>(n) * k);
  for (NodeId i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) keys.push_back(edge_key(i, nbr[static_cast<std::size_t>(i) * k + t]));
  std::sort(keys.begin(), keys.end());

  std::vector<WeightedEdge> edges;
  edges.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size();) {
    const std::uint64_t key = keys[i];
    std::size_t j = i;
    while (j < keys.size() && keys[j] == key) ++j;
    const bool keep = cfg.sym == KnnSymmetrization::union_of_neighbors ? true : (j - i >= 2);
    if (keep) {
      const NodeId u = static_cast<NodeId>(key >> 32);
      const NodeId v = static_cast<NodeId>(key & 0xffffffffu);
      double w = 1.0;
      if (cfg.mode == KnnWeightMode::exponential) {
        const double dist = (pts.row(u) - pts.row(v)).norm();
        const double denom = cfg.weight_form == KnnWeightForm::half ? 2.0 * cfg.sigma2 : cfg.sigma2;
        w = std::exp(-dist / denom);
      }
      edges.push_back({u, v, w});
    }
    i = j;
  }
  return edges;
}

}  // namespace sparsehfs
