#include "sparsehfs/datagen.hpp"

#include <gtest/gtest.h>

#include "sparsehfs/errors.hpp"

using namespace sparsehfs;

TEST(Datagen, MinimalInstanceOnePointPerCluster) {
  GeneratedData gen = generate_four_clusters(4, 3);
  ASSERT_EQ(gen.data.size(), 4u);
  for (NodeId i = 0; i < 4; ++i) {
    const auto& spec = gen.clusters[gen.cluster_of[i]];
    const double dx = gen.data.points(i, 0) - spec.center_x;
    const double dy = gen.data.points(i, 1) - spec.center_y;
    EXPECT_LE(std::sqrt(dx * dx + dy * dy), 6.0 * spec.spread);
    EXPECT_EQ(gen.data.truth_labels[i], spec.class_label);
  }
}

TEST(Datagen, SeedDeterminism) {
  GeneratedData a = generate_four_clusters(120, 9);
  GeneratedData b = generate_four_clusters(120, 9);
  EXPECT_EQ(a.data.points, b.data.points);
  EXPECT_EQ(a.data.truth_labels, b.data.truth_labels);
  GeneratedData c = generate_four_clusters(120, 10);
  EXPECT_NE(a.data.points, c.data.points);
}

TEST(Datagen, ClassBalanceExact) {
  for (std::int64_t n : {12100, 12101, 12102, 12103, 8, 9, 10, 11}) {
    GeneratedData gen = generate_four_clusters(n, 1);
    std::int64_t pos = 0;
    for (auto c : gen.data.truth_labels) pos += c > 0;
    EXPECT_EQ(pos, (n + 1) / 2) << "n=" << n;
    EXPECT_EQ(static_cast<std::int64_t>(gen.data.truth_labels.size()) - pos, n / 2);
  }
}

TEST(Datagen, DefaultGeometryMatchesDocumentedCenters) {
  auto specs = default_four_cluster_geometry();
  ASSERT_EQ(specs.size(), 4u);
  EXPECT_DOUBLE_EQ(specs[0].center_y, 4.5);
  EXPECT_EQ(specs[0].class_label, 1);
  EXPECT_DOUBLE_EQ(specs[1].center_y, 1.5);
  EXPECT_EQ(specs[1].class_label, 1);
  EXPECT_DOUBLE_EQ(specs[2].center_y, -1.5);
  EXPECT_EQ(specs[2].class_label, -1);
  EXPECT_DOUBLE_EQ(specs[3].center_y, -4.5);
  EXPECT_EQ(specs[3].class_label, -1);
  for (const auto& s : specs) EXPECT_DOUBLE_EQ(s.spread, kDefaultClusterSpread);
}

TEST(Datagen, RejectsTinyN) { EXPECT_THROW(generate_four_clusters(3, 1), config_error); }

TEST(SelectLabeledSet, TwoPerExtreme) {
  GeneratedData gen = generate_four_clusters(400, 5);
  LabelAssignment labels = select_labeled_set(gen, 2, 11);
  ASSERT_EQ(labels.count(), 4u);
  int pos = 0, neg = 0;
  for (const auto& [id, y] : labels.labeled) {
    const auto& spec = gen.clusters[gen.cluster_of[id]];
    EXPECT_EQ(static_cast<double>(spec.class_label), y);
    if (y > 0) {
      ++pos;
      // Uppermost cluster: ties break to the lower cluster index (cluster 0).
      EXPECT_EQ(gen.cluster_of[id], 0u);
    } else {
      ++neg;
      EXPECT_EQ(gen.cluster_of[id], 3u);
    }
  }
  EXPECT_EQ(pos, 2);
  EXPECT_EQ(neg, 2);
}

TEST(SelectLabeledSet, OnePerExtreme) {
  GeneratedData gen = generate_four_clusters(40, 2);
  LabelAssignment labels = select_labeled_set(gen, 1, 3);
  EXPECT_EQ(labels.count(), 2u);
}

TEST(SelectLabeledSet, SeedDeterminism) {
  GeneratedData gen = generate_four_clusters(200, 4);
  LabelAssignment a = select_labeled_set(gen, 2, 7);
  LabelAssignment b = select_labeled_set(gen, 2, 7);
  EXPECT_EQ(a.labeled, b.labeled);
  LabelAssignment c = select_labeled_set(gen, 2, 8);
  EXPECT_NE(a.labeled, c.labeled);
}

TEST(SelectLabeledSet, PerExtremeExceedsClusterSize) {
  GeneratedData gen = generate_four_clusters(8, 1);  // 2 points per cluster
  EXPECT_THROW(select_labeled_set(gen, 3, 1), config_error);
}
