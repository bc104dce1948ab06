#include "sparsehfs/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "testing/test_support.hpp"

using namespace sparsehfs;

TEST(WeightedGraphBuild, SingleEdgeDegrees) {
  WeightedGraph g(2, {{0, 1, 1.0}});
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_DOUBLE_EQ(g.degrees()[0], 1.0);
  EXPECT_DOUBLE_EQ(g.degrees()[1], 1.0);
}

TEST(WeightedGraphBuild, MergesParallelEdges) {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 0, 2.0}});
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edges()[0].u, 0u);
  EXPECT_EQ(g.edges()[0].v, 1u);
  EXPECT_DOUBLE_EQ(g.edges()[0].weight, 3.0);
  EXPECT_DOUBLE_EQ(g.degrees()[0], 3.0);
  EXPECT_DOUBLE_EQ(g.degrees()[1], 3.0);
  EXPECT_DOUBLE_EQ(g.degrees()[2], 0.0);
}

TEST(WeightedGraphBuild, RejectsSelfLoop) {
  EXPECT_THROW(WeightedGraph(3, {{0, 0, 1.0}}), graph_error);
}

TEST(WeightedGraphBuild, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(WeightedGraph(2, {{0, 2, 1.0}}), graph_error);
}

TEST(WeightedGraphBuild, RejectsBadWeights) {
  EXPECT_THROW(WeightedGraph(2, {{0, 1, 0.0}}), graph_error);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, -1.0}}), graph_error);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, std::nan("")}}), graph_error);
  EXPECT_THROW(WeightedGraph(2, {{0, 1, std::numeric_limits<double>::infinity()}}), graph_error);
}

TEST(WeightedGraphBuild, OrderIndependent) {
  auto edges = testsupport::random_connected_edges(12, 20, 77);
  WeightedGraph a(12, edges);
  std::mt19937_64 rng(5);
  std::shuffle(edges.begin(), edges.end(), rng);
  WeightedGraph b(12, edges);
  ASSERT_EQ(a.num_edges(), b.num_edges());
  for (std::size_t i = 0; i < a.num_edges(); ++i) {
    EXPECT_EQ(a.edges()[i], b.edges()[i]);
  }
  for (NodeId i = 0; i < 12; ++i) EXPECT_DOUBLE_EQ(a.degrees()[i], b.degrees()[i]);
}

TEST(WeightedGraphBuild, EdgeSumIdentity) {
  WeightedGraph g = testsupport::random_connected_graph(30, 60, 3);
  double degree_sum = 0.0, weight_sum = 0.0;
  for (double d : g.degrees()) degree_sum += d;
  for (const auto& e : g.edges()) weight_sum += e.weight;
  EXPECT_NEAR(degree_sum, 2.0 * weight_sum, 1e-12 * degree_sum);
}

TEST(LaplacianApply, UnweightedPathByHand) {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  Eigen::Vector3d x(1.0, 0.0, -1.0);
  Eigen::VectorXd y = g.laplacian_apply(x);
  EXPECT_DOUBLE_EQ(y[0], 1.0);
  EXPECT_DOUBLE_EQ(y[1], 0.0);
  EXPECT_DOUBLE_EQ(y[2], -1.0);
}

TEST(LaplacianApply, OnesInNullspace) {
  WeightedGraph g = testsupport::random_connected_graph(20, 40, 9);
  Eigen::VectorXd y = g.laplacian_apply(Eigen::VectorXd::Ones(20));
  EXPECT_LE(y.lpNorm<Eigen::Infinity>(), 1e-12 * g.max_degree());
}

TEST(LaplacianApply, MatchesDenseOracle) {
  auto edges = testsupport::random_connected_edges(6, 8, 42);
  WeightedGraph g(6, edges);
  Eigen::MatrixXd lap = testsupport::naive_dense_laplacian(6, g.edges());
  Eigen::VectorXd x = testsupport::random_vector(6, 11);
  Eigen::VectorXd want = lap * x;
  Eigen::VectorXd got = g.laplacian_apply(x);
  EXPECT_LE((want - got).lpNorm<Eigen::Infinity>(), 1e-12 * want.lpNorm<Eigen::Infinity>());
}

TEST(LaplacianApply, OutputSumsToZero) {
  WeightedGraph g = testsupport::random_connected_graph(40, 120, 4);
  Eigen::VectorXd x = testsupport::random_vector(40, 8);
  Eigen::VectorXd y = g.laplacian_apply(x);
  const double tol = 1e-9 * 40 * g.max_degree() * x.lpNorm<Eigen::Infinity>();
  EXPECT_LE(std::abs(y.sum()), tol);
}

TEST(LaplacianApply, DimensionMismatchThrows) {
  WeightedGraph g(3, {{0, 1, 1.0}});
  EXPECT_THROW(g.laplacian_apply(Eigen::VectorXd::Zero(2)), dimension_error);
}

TEST(IsConnected, Cases) {
  EXPECT_TRUE(WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}}).is_connected());
  EXPECT_FALSE(WeightedGraph(3, {{0, 1, 1.0}}).is_connected());
  EXPECT_TRUE(WeightedGraph(1, {}).is_connected());
}

TEST(QuadraticForm, SingleEdgeDefinition) {
  WeightedGraph g(2, {{0, 1, 2.5}});
  Eigen::Vector2d x(1.0, 0.0);
  EXPECT_DOUBLE_EQ(g.quadratic_form(x), 2.5);
}

TEST(QuadraticForm, OnesGiveZero) {
  WeightedGraph g = testsupport::random_connected_graph(15, 25, 6);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(15);
  EXPECT_LE(std::abs(g.quadratic_form(ones)), 1e-10 * 15 * g.max_degree());
}

TEST(QuadraticForm, MatchesDenseAndApply) {
  WeightedGraph g = testsupport::random_connected_graph(9, 14, 21);
  Eigen::MatrixXd lap = testsupport::naive_dense_laplacian(9, g.edges());
  Eigen::VectorXd x = testsupport::random_vector(9, 3);
  const double dense = x.dot(lap * x);
  const double q = g.quadratic_form(x);
  EXPECT_NEAR(q, dense, 1e-10 * std::abs(dense));
  EXPECT_NEAR(q, x.dot(g.laplacian_apply(x)), 1e-10 * std::abs(dense));
}

TEST(QuadraticForm, NonNegativeOnRandomVectors) {
  WeightedGraph g = testsupport::random_connected_graph(25, 60, 13);
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_GE(g.quadratic_form(testsupport::random_vector(25, s)), 0.0);
  }
}

TEST(QuadraticForm, DimensionMismatchThrows) {
  WeightedGraph g(3, {{0, 1, 1.0}});
  EXPECT_THROW(g.quadratic_form(Eigen::VectorXd::Zero(5)), dimension_error);
}

TEST(EdgeIndex, LookupFindsCanonicalEdges) {
  WeightedGraph g(4, {{2, 1, 1.0}, {0, 3, 2.0}});
  ASSERT_TRUE(g.edge_index(1, 2).has_value());
  ASSERT_TRUE(g.edge_index(3, 0).has_value());
  EXPECT_FALSE(g.edge_index(0, 1).has_value());
  EXPECT_DOUBLE_EQ(g.edges()[*g.edge_index(3, 0)].weight, 2.0);
}

TEST(ConnectedComponents, LabelsAndCount) {
  WeightedGraph g(5, {{0, 1, 1.0}, {3, 4, 1.0}});
  auto [label, count] = connected_components(g);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(label[0], label[1]);
  EXPECT_EQ(label[3], label[4]);
  EXPECT_NE(label[0], label[2]);
  EXPECT_NE(label[0], label[3]);
}
