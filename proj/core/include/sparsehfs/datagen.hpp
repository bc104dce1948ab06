#pragma once

#include <cstdint>
#include <vector>

#include "sparsehfs/dataset.hpp"
#include "sparsehfs/hfs.hpp"

namespace sparsehfs {

struct ClusterSpec {
  double center_x = 0.0;
  double center_y = 0.0;
  double spread = 1.0;
  std::int64_t count = 0;
  std::int8_t class_label = 1;
};

struct GeneratedData {
  Dataset data;
  /// Generation metadata: which cluster each point came from.
  std::vector<NodeId> cluster_of;
  std::vector<ClusterSpec> clusters;
};

/// Default cluster spread. Chosen so that small-k knn graphs keep the
/// clusters separated while mid-k graphs connect: the accuracy-vs-k curve
/// then shows the low start / plateau / decline shape.
inline constexpr double kDefaultClusterSpread = 0.5;

/// Four clusters stacked vertically at y = +-4.5 and +-1.5, the upper two
/// labeled +1 and the lower two -1, isotropic Gaussians. Consecutive
/// clusters sit a uniform gap apart, so below the k threshold every cluster
/// stays separated, and past it labels flow from the extreme (labeled)
/// clusters inward through their same-class neighbors.
std::vector<ClusterSpec> default_four_cluster_geometry(double spread = kDefaultClusterSpread);

/// Samples `specs` with counts filled in; points are laid out cluster-major.
GeneratedData generate_clusters(const std::vector<ClusterSpec>& specs, std::uint64_t seed);

/// n points across the default four-cluster geometry; the remainder of n/4
/// is distributed round-robin alternating classes so the two classes stay
/// balanced at ceil(n/2) vs floor(n/2).
GeneratedData generate_four_clusters(std::int64_t n, std::uint64_t seed,
                                     double spread = kDefaultClusterSpread);

/// per_extreme random points from the uppermost cluster (its class label) and
/// per_extreme from the lowermost. Ties on cluster height break toward the
/// lower cluster index.
LabelAssignment select_labeled_set(const GeneratedData& gen, std::int64_t per_extreme,
                                   std::uint64_t seed);

}  // namespace sparsehfs
