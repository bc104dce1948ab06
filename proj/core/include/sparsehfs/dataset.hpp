#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "sparsehfs/graph.hpp"

namespace sparsehfs {

/// Feature vectors, one point per row; truth_labels (values in {-1,+1}) is
/// empty when the source carried no label column.
struct Dataset {
  Eigen::MatrixXd points;
  std::vector<std::int8_t> truth_labels;

  NodeId size() const { return static_cast<NodeId>(points.rows()); }
  int dim() const { return static_cast<int>(points.cols()); }
};

/// Numeric CSV with an optional header; a final column named `label` becomes
/// truth_labels. Parse errors name the offending row and column.
Dataset load_feature_csv(const std::string& path);

void write_feature_csv(const std::string& path, const Dataset& data);

}  // namespace sparsehfs
