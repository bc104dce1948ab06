#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sparsehfs/datagen.hpp"
#include "sparsehfs/knn.hpp"
#include "sparsehfs/sparsifier.hpp"

namespace sparsehfs {

/// One sweep: methods x k values x seeds on either the synthetic four-cluster
/// dataset or a feature CSV with truth labels.
struct ExperimentConfig {
  // Data source. features_csv wins when nonempty.
  std::int64_t n = 12100;
  std::string features_csv;
  std::uint64_t data_seed = 1;
  double cluster_spread = kDefaultClusterSpread;
  std::int64_t labels_per_extreme = 2;
  /// CSV mode only: number of uniformly drawn labeled nodes.
  std::int64_t labeled_count = 4;

  std::vector<int> k_values;
  KnnWeightMode weight_mode = KnnWeightMode::unweighted;
  double sigma2 = 0.0;
  KnnWeightForm weight_form = KnnWeightForm::half;

  bool run_stable = true;
  bool run_sparse = true;
  bool run_subsampling = false;
  bool run_1nn = true;
  std::int64_t subsample_s = 0;  // 0 = n/8

  double epsilon = 0.8;
  double gamma = 1.0;
  BudgetMode budget_mode = BudgetMode::practical;
  double budget_constant = 1.0;
  std::int64_t budget = 0;
  std::int64_t block_size = 0;
  ResistanceMode resistance = ResistanceMode::sketched;
  int sketch_dim = 0;
  double sketch_constant = 24.0;
  double resistance_tolerance = 0.0;

  double solver_tolerance = 1e-6;
  int max_iterations = 0;

  std::vector<std::uint64_t> seeds{1};
  int jobs = 1;
  bool shuffle_stream = false;
  std::uint64_t shuffle_seed = 0;

  /// Adds lambda2 / lambda_n / theorem-bound columns (eigen cost; off by
  /// default above desk scale).
  bool compute_spectrum = false;
  double bound_c = 2.0;
  double bound_delta = 0.05;

  void validate() const;
};

struct ExperimentRow {
  std::string method;
  int k = 0;
  double eps = 0.0;
  double gamma = 0.0;
  std::uint64_t seed = 0;
  std::int64_t l = 0;
  double accuracy = 0.0;
  std::int64_t edges_h = 0;
  std::int64_t edges_g = 0;
  double edge_ratio = 0.0;
  double wall_ms = 0.0;
  std::int64_t peak_edges = 0;
  // nan when not computed.
  double lambda2 = std::numeric_limits<double>::quiet_NaN();
  double lambda_n = std::numeric_limits<double>::quiet_NaN();
  double bound = std::numeric_limits<double>::quiet_NaN();
};

/// Runs the sweep; rows come back in (k, seed, method) order regardless of
/// the jobs setting. Progress notes go to *progress when given.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg,
                                          std::ostream* progress = nullptr);

std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentRow& row);
void write_experiment_csv(const std::string& path, const std::vector<ExperimentRow>& rows);

}  // namespace sparsehfs
