#include "sparsehfs/hfs.hpp"

#include <gtest/gtest.h>

#include <filesystem>

#include "sparsehfs/dense.hpp"
#include "sparsehfs/edge_list_io.hpp"
#include "testing/test_support.hpp"

using namespace sparsehfs;

namespace {

LabelAssignment make_labels(NodeId n, std::initializer_list<std::pair<NodeId, double>> entries) {
  LabelAssignment labels;
  labels.n = n;
  labels.bound_M = 2.0;
  for (const auto& [id, y] : entries) labels.labeled[id] = y;
  return labels;
}

}  // namespace

TEST(CenterLabels, SymmetricPairUnchanged) {
  auto [centered, mean] = center_labels(make_labels(6, {{0, 1.0}, {5, -1.0}}));
  EXPECT_DOUBLE_EQ(mean, 0.0);
  EXPECT_DOUBLE_EQ(centered.labeled.at(0), 1.0);
  EXPECT_DOUBLE_EQ(centered.labeled.at(5), -1.0);
}

TEST(CenterLabels, EqualLabelsCenterToZero) {
  auto [centered, mean] = center_labels(make_labels(4, {{0, 1.0}, {1, 1.0}}));
  EXPECT_DOUBLE_EQ(mean, 1.0);
  EXPECT_DOUBLE_EQ(centered.labeled.at(0), 0.0);
  EXPECT_DOUBLE_EQ(centered.labeled.at(1), 0.0);
}

TEST(CenterLabels, ThirdsArithmetic) {
  auto [centered, mean] = center_labels(make_labels(5, {{0, 1.0}, {1, 1.0}, {2, -1.0}}));
  EXPECT_NEAR(mean, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(centered.labeled.at(0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(centered.labeled.at(1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(centered.labeled.at(2), -4.0 / 3.0, 1e-15);
}

TEST(StableHfs, TwoNodeAntisymmetric) {
  WeightedGraph g(2, {{0, 1, 1.0}});
  HfsSolution sol = stable_hfs(g, make_labels(2, {{0, 1.0}, {1, -1.0}}), 1.0);
  EXPECT_NEAR(sol.f[0] + sol.f[1], 0.0, 1e-9);
  EXPECT_GT(sol.f[0], 0.0);
  EXPECT_LT(sol.f[0], 1.0);
  ClassVector classes = predict_classes(sol);
  EXPECT_EQ(classes[0], 1);
  EXPECT_EQ(classes[1], -1);
}

TEST(StableHfs, CenteredZeroLabelsGiveZeroSolution) {
  WeightedGraph g = testsupport::random_connected_graph(8, 10, 4);
  auto [centered, mean] = center_labels(make_labels(8, {{0, 1.0}, {3, 1.0}}));
  HfsSolution sol = stable_hfs(g, centered, 1.0);
  EXPECT_DOUBLE_EQ(sol.f.lpNorm<Eigen::Infinity>(), 0.0);
  EXPECT_DOUBLE_EQ(sol.mu, 0.0);
}

TEST(StableHfs, MatchesDenseOracle) {
  WeightedGraph g = testsupport::random_connected_graph(10, 16, 12);
  LabelAssignment labels = testsupport::random_labels(10, 3, 5);
  auto [centered, mean] = center_labels(labels);
  HfsSolution fast = stable_hfs(g, centered, 0.7);
  HfsSolution dense = hfs_dense_oracle(g, centered, 0.7);
  EXPECT_LE((fast.f - dense.f).lpNorm<Eigen::Infinity>(), 1e-6);
  EXPECT_NEAR(fast.mu, dense.mu, 1e-6);
}

TEST(StableHfs, AgreesWithTwoSolveQuotientForm) {
  // f = z1 - mu z2 with M z1 = y_S, M z2 = 1, mu = sum(z1)/sum(z2); the
  // projected solve must reproduce the quotient-form solution and mu.
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const NodeId n = 9;
    WeightedGraph g = testsupport::random_connected_graph(n, 14, seed);
    LabelAssignment labels = testsupport::random_labels(n, 3, seed + 50);
    const double gamma = 0.9;
    const double gl = gamma * static_cast<double>(labels.count());

    Eigen::MatrixXd m = gl * testsupport::naive_dense_laplacian(n, g.edges());
    Eigen::VectorXd y_s = Eigen::VectorXd::Zero(n);
    for (const auto& [id, y] : labels.labeled) {
      m(id, id) += 1.0;
      y_s[id] = y;
    }
    Eigen::VectorXd z1 = m.ldlt().solve(y_s);
    Eigen::VectorXd z2 = m.ldlt().solve(Eigen::VectorXd::Ones(n));
    const double mu = z1.sum() / z2.sum();
    Eigen::VectorXd want = z1 - mu * z2;

    HfsSolution sol = stable_hfs(g, labels, gamma);
    EXPECT_LE((sol.f - want).lpNorm<Eigen::Infinity>(), 1e-7) << "seed " << seed;
    EXPECT_NEAR(sol.mu, mu, 1e-7);
  }
}

TEST(StableHfs, SolutionIsCentered) {
  for (std::uint64_t seed : {4u, 5u, 6u}) {
    const NodeId n = 20;
    WeightedGraph g = testsupport::random_connected_graph(n, 40, seed);
    HfsSolution sol = stable_hfs(g, testsupport::random_labels(n, 5, seed), 1.3);
    EXPECT_LE(std::abs(sol.f.sum()), 1e-6 * n * (sol.f.lpNorm<Eigen::Infinity>() + 1.0));
  }
}

TEST(StableHfs, ObjectiveLocalMinimumCertificate) {
  const NodeId n = 15;
  WeightedGraph g = testsupport::random_connected_graph(n, 25, 8);
  LabelAssignment labels = testsupport::random_labels(n, 4, 2);
  auto [centered, mean] = center_labels(labels);
  SolverConfig tight;
  tight.rel_tolerance = 1e-12;
  HfsSolution sol = stable_hfs(g, centered, 1.0, tight);
  const double at_solution = testsupport::hfs_objective(g, centered, 1.0, sol.f);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd eta = testsupport::random_vector(n, 9000 + trial);
    eta.array() -= eta.mean();
    eta *= 1e-3 / eta.norm();
    EXPECT_LE(at_solution, testsupport::hfs_objective(g, centered, 1.0, sol.f + eta) + 1e-14);
  }
}

TEST(StableHfs, LargeGammaShrinksSolution) {
  const NodeId n = 12;
  WeightedGraph g = testsupport::random_connected_graph(n, 20, 3);
  auto [centered, mean] = center_labels(testsupport::random_labels(n, 4, 7));
  const double norm_low = stable_hfs(g, centered, 1.0).f.norm();
  const double norm_high = stable_hfs(g, centered, 1e6).f.norm();
  EXPECT_LE(norm_high, 1e-3 * norm_low);
}

TEST(StableHfs, Errors) {
  WeightedGraph disconnected(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  EXPECT_THROW(stable_hfs(disconnected, make_labels(4, {{0, 1.0}}), 1.0), connectivity_error);
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  LabelAssignment empty;
  empty.n = 3;
  EXPECT_THROW(stable_hfs(g, empty, 1.0), config_error);
  EXPECT_THROW(stable_hfs(g, make_labels(3, {{0, 1.0}}), 0.0), config_error);
  SolverConfig tiny;
  tiny.max_iterations = 1;
  WeightedGraph big = testsupport::random_connected_graph(60, 240, 2);
  EXPECT_THROW(stable_hfs(big, testsupport::random_labels(60, 6, 1), 1.0, tiny), convergence_error);
}

TEST(PredictClasses, SignsAndTieRule) {
  HfsSolution sol;
  sol.f = Eigen::Vector2d(0.3, -0.2);
  ClassVector c = predict_classes(sol);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], -1);
  sol.f = Eigen::Vector2d(0.0, 0.0);
  c = predict_classes(sol);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], 1);
}

TEST(DenseOracle, TwoNodeAntisymmetric) {
  WeightedGraph g(2, {{0, 1, 1.0}});
  HfsSolution sol = hfs_dense_oracle(g, make_labels(2, {{0, 1.0}, {1, -1.0}}), 1.0);
  EXPECT_NEAR(sol.f[0] + sol.f[1], 0.0, 1e-12);
  EXPECT_GT(sol.f[0], 0.0);
}

TEST(DenseOracle, CenteredZeroGivesZero) {
  WeightedGraph g = testsupport::random_connected_graph(7, 9, 2);
  auto [centered, mean] = center_labels(make_labels(7, {{1, -1.0}, {4, -1.0}}));
  HfsSolution sol = hfs_dense_oracle(g, centered, 1.0);
  EXPECT_LE(sol.f.lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(DenseOracle, MatchesGradientDescentMinimizer) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const NodeId n = 8 + 2 * static_cast<NodeId>(seed);
    WeightedGraph g = testsupport::random_connected_graph(n, 2 * n, seed);
    LabelAssignment labels = testsupport::random_labels(n, 2 + seed % 3, seed + 10);
    auto [centered, mean] = center_labels(labels);
    const double gamma = 0.5 + 0.1 * seed;
    HfsSolution oracle = hfs_dense_oracle(g, centered, gamma);
    Eigen::VectorXd gd = testsupport::hfs_gradient_descent(g, centered, gamma, 20000);
    EXPECT_LE((oracle.f - gd).lpNorm<Eigen::Infinity>(),
              1e-4 * (oracle.f.lpNorm<Eigen::Infinity>() + 1.0))
        << "seed " << seed;
  }
}

TEST(DenseOracle, SizeGuard) {
  WeightedGraph g(2, {{0, 1, 1.0}});
  LabelAssignment labels = make_labels(2, {{0, 1.0}});
  EXPECT_NO_THROW(hfs_dense_oracle(g, labels, 1.0));
  // Guard is enforced before any allocation.
  WeightedGraph big(2001, {{0, 1, 1.0}, {1, 2, 1.0}});
  LabelAssignment big_labels = make_labels(2001, {{0, 1.0}});
  EXPECT_THROW(hfs_dense_oracle(big, big_labels, 1.0), dimension_error);
}

TEST(SparseHfs, PassthroughIdentity) {
  const NodeId n = 30;
  WeightedGraph g = testsupport::random_connected_graph(n, 80, 21);
  LabelAssignment labels = testsupport::random_labels(n, 5, 3);

  SparsifierParams params;
  params.epsilon = 0.5;
  params.n = n;
  params.resistance = ResistanceMode::capped;
  params.budget = static_cast<std::int64_t>(g.num_edges()) + 5;

  VectorEdgeSource src(n, g.edges());
  SparseHfsResult sparse = sparse_hfs(src, labels, 1.0, params, {}, 9);
  auto [centered, mean] = center_labels(labels);
  HfsSolution stable = stable_hfs(g, centered, 1.0);
  EXPECT_DOUBLE_EQ((sparse.solution.f - stable.f).lpNorm<Eigen::Infinity>(), 0.0);
  EXPECT_DOUBLE_EQ(sparse.solution.mu, stable.mu);
  EXPECT_DOUBLE_EQ(sparse.solution.centered_mean, mean);
}

TEST(SparseHfs, DeterministicGivenSeed) {
  const NodeId n = 40;
  auto edges = testsupport::random_connected_edges(n, 150, 6);
  LabelAssignment labels = testsupport::random_labels(n, 4, 8);
  SparsifierParams params;
  params.epsilon = 0.6;
  params.n = n;
  params.sketch_dim = 24;
  params.block_size = 60;
  SolverConfig cfg;
  cfg.rel_tolerance = 1e-6;

  auto run = [&] {
    VectorEdgeSource src(n, edges);
    return sparse_hfs(src, labels, 1.0, params, cfg, 31);
  };
  SparseHfsResult a = run(), b = run();
  EXPECT_DOUBLE_EQ((a.solution.f - b.solution.f).lpNorm<Eigen::Infinity>(), 0.0);
}

TEST(LabelsIo, RoundTripAndErrors) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sparsehfs_labels_test";
  fs::create_directories(dir);
  const std::string p = (dir / "labels.tsv").string();

  LabelAssignment labels = make_labels(10, {{2, 1.0}, {7, -1.0}});
  write_labels(p, labels);
  LabelAssignment loaded = load_labels(p, 10);
  EXPECT_EQ(loaded.labeled.size(), 2u);
  EXPECT_DOUBLE_EQ(loaded.labeled.at(2), 1.0);
  EXPECT_DOUBLE_EQ(loaded.labeled.at(7), -1.0);

  EXPECT_THROW(load_labels((dir / "missing.tsv").string(), 10), io_error);
  {
    std::ofstream bad(dir / "bad.tsv");
    bad << "2\tx\n";
  }
  EXPECT_THROW(load_labels((dir / "bad.tsv").string(), 10), parse_error);
  {
    std::ofstream out_of_range(dir / "oor.tsv");
    out_of_range << "99\t1\n";
  }
  EXPECT_THROW(load_labels((dir / "oor.tsv").string(), 10), parse_error);
  fs::remove_all(dir);
}
