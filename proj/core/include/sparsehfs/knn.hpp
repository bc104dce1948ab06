#pragma once

#include <vector>

#include "sparsehfs/dataset.hpp"
#include "sparsehfs/graph.hpp"

namespace sparsehfs {

enum class KnnWeightMode { unweighted, exponential };

/// The two exponential weight variants in circulation:
///   half:  exp(-||xi - xj|| / (2 sigma^2))   (default)
///   plain: exp(-||xi - xj|| / sigma^2)
/// The norm is unsquared in both.
enum class KnnWeightForm { half, plain };

/// union: edge (i,j) if j in knn(i) OR i in knn(j). mutual: AND.
enum class KnnSymmetrization { union_of_neighbors, mutual };

struct KnnConfig {
  int k = 0;
  KnnWeightMode mode = KnnWeightMode::unweighted;
  double sigma2 = 0.0;
  KnnWeightForm weight_form = KnnWeightForm::half;
  KnnSymmetrization sym = KnnSymmetrization::union_of_neighbors;
};

/// Exact brute-force k-nearest-neighbor graph with Euclidean distances.
/// Distance ties break toward the lower node index, so the output is a
/// deterministic function of the input. Edges come out canonical and sorted,
/// ready to stream.
std::vector<WeightedEdge> build_knn_graph(const Dataset& data, const KnnConfig& cfg);

}  // namespace sparsehfs
