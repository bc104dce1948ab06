#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparsehfs/graph.hpp"

namespace sparsehfs {

/// One-pass edge producer. File-backed sources never hold more than the
/// current line in memory; the stream order is the file line order.
class EdgeSource {
 public:
  virtual ~EdgeSource() = default;
  virtual std::optional<WeightedEdge> next() = 0;
  virtual NodeId num_nodes() const = 0;
};

class VectorEdgeSource final : public EdgeSource {
 public:
  VectorEdgeSource(NodeId n, std::span<const WeightedEdge> edges) : n_(n), edges_(edges) {}
  std::optional<WeightedEdge> next() override {
    if (pos_ >= edges_.size()) return std::nullopt;
    return edges_[pos_++];
  }
  NodeId num_nodes() const override { return n_; }

 private:
  NodeId n_;
  std::span<const WeightedEdge> edges_;
  std::size_t pos_ = 0;
};

/// Text edge-list format: a required `# nodes=<n>` header comment, then one
/// `u<TAB>v<TAB>weight` edge per line. `#` lines are comments, blank lines
/// are skipped. Node ids are zero-based; isolated nodes are allowed.
class EdgeListFileSource final : public EdgeSource {
 public:
  explicit EdgeListFileSource(const std::string& path);
  std::optional<WeightedEdge> next() override;
  NodeId num_nodes() const override { return n_; }

 private:
  std::string path_;
  std::ifstream in_;
  NodeId n_ = 0;
  std::size_t line_no_ = 0;
};

struct EdgeListData {
  NodeId n = 0;
  std::vector<WeightedEdge> edges;
};

EdgeListData read_edge_list(const std::string& path);
WeightedGraph read_graph(const std::string& path);

/// Writes the header and edges in the given order, weights in round-trip
/// precision so rereads are exact.
void write_edge_list(const std::string& path, NodeId n, std::span<const WeightedEdge> edges);

}  // namespace sparsehfs
