#include "sparsehfs/datagen.hpp"

#include <algorithm>
#include <random>

#include "sparsehfs/errors.hpp"
#include "sparsehfs/rng.hpp"

namespace sparsehfs {

std::vector<ClusterSpec> default_four_cluster_geometry(double spread) {
  return {
      {0.0, 4.5, spread, 0, +1},
      {0.0, 1.5, spread, 0, +1},
      {0.0, -1.5, spread, 0, -1},
      {0.0, -4.5, spread, 0, -1},
  };
}

GeneratedData generate_clusters(const std::vector<ClusterSpec>& specs, std::uint64_t seed) {
  if (specs.empty()) throw config_error("datagen: no cluster specs");
  std::int64_t total = 0;
  for (const auto& s : specs) {
    if (s.count < 1) throw config_error("datagen: cluster count must be >= 1");
    if (!(s.spread > 0.0)) throw config_error("datagen: cluster spread must be positive");
    if (s.class_label != 1 && s.class_label != -1)
      throw config_error("datagen: class label must be -1 or +1");
    total += s.count;
  }

  GeneratedData gen;
  gen.clusters = specs;
  gen.data.points.resize(total, 2);
  gen.data.truth_labels.resize(total);
  gen.cluster_of.resize(total);

  std::int64_t row = 0;
  for (std::size_t c = 0; c < specs.size(); ++c) {
    auto rng = make_rng(seed, std::uint64_t{0xda7a}, static_cast<std::uint64_t>(c));
    std::normal_distribution<double> normal(0.0, specs[c].spread);
    for (std::int64_t i = 0; i < specs[c].count; ++i, ++row) {
      gen.data.points(row, 0) = specs[c].center_x + normal(rng);
      gen.data.points(row, 1) = specs[c].center_y + normal(rng);
      gen.data.truth_labels[row] = specs[c].class_label;
      gen.cluster_of[row] = static_cast<NodeId>(c);
    }
  }
  return gen;
}

GeneratedData generate_four_clusters(std::int64_t n, std::uint64_t seed, double spread) {
  if (n < 4) throw config_error("datagen: need n >= 4 for four clusters");
  auto specs = default_four_cluster_geometry(spread);
  const std::int64_t base = n / 4;
  for (auto& s : specs) s.count = base;
  // Alternate classes when distributing the remainder to keep the class
  // balance at ceil(n/2) vs floor(n/2).
  const int order[4] = {0, 2, 1, 3};
  for (std::int64_t r = 0; r < n % 4; ++r) ++specs[order[r]].count;
  return generate_clusters(specs, seed);
}

LabelAssignment select_labeled_set(const GeneratedData& gen, std::int64_t per_extreme,
                                   std::uint64_t seed) {
  if (per_extreme < 1) throw config_error("select_labeled_set: per_extreme must be >= 1");
  const auto& specs = gen.clusters;
  if (specs.empty()) throw config_error("select_labeled_set: no cluster metadata");

  std::size_t upper = 0, lower = 0;
  for (std::size_t c = 1; c < specs.size(); ++c) {
    if (specs[c].center_y > specs[upper].center_y) upper = c;
    if (specs[c].center_y < specs[lower].center_y) lower = c;
  }

  LabelAssignment labels;
  labels.n = gen.data.size();
  labels.bound_M = 1.0;
  for (std::size_t which = 0; which < 2; ++which) {
    const std::size_t cluster = which == 0 ? upper : lower;
    std::vector<NodeId> members;
    for (NodeId i = 0; i < gen.data.size(); ++i)
      if (gen.cluster_of[i] == cluster) members.push_back(i);
    if (per_extreme > static_cast<std::int64_t>(members.size()))
      throw config_error("select_labeled_set: per_extreme exceeds cluster size");
    auto rng = make_rng(seed, std::uint64_t{0x5e1ec7}, static_cast<std::uint64_t>(which));
    std::vector<NodeId> chosen;
    std::sample(members.begin(), members.end(), std::back_inserter(chosen),
                static_cast<std::size_t>(per_extreme), rng);
    for (NodeId id : chosen) labels.labeled[id] = static_cast<double>(specs[cluster].class_label);
  }
  return labels;
}

}  // namespace sparsehfs
