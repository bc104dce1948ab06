#include "sparsehfs/resistance.hpp"

#include <cmath>
#include <exception>
#include <mutex>

#include "sparsehfs/errors.hpp"
#include "sparsehfs/rng.hpp"

namespace sparsehfs {

ResistanceEstimate effective_resistance_exact(const WeightedGraph& g, NodeId u, NodeId v,
                                              const SolverConfig& cfg) {
  if (u == v) throw dimension_error("effective_resistance_exact: u == v");
  if (u >= g.num_nodes() || v >= g.num_nodes())
    throw dimension_error("effective_resistance_exact: node out of range");
  Eigen::VectorXd b = Eigen::VectorXd::Zero(g.num_nodes());
  b[u] = 1.0;
  b[v] = -1.0;
  Eigen::VectorXd x = solve_laplacian(g, b, cfg);
  return {std::min(u, v), std::max(u, v), x[u] - x[v], 1.0};
}

int default_sketch_dim(NodeId n, double alpha, double constant, std::size_t m) {
  const double gap = 1.0 - 1.0 / alpha;
  const double raw = constant * std::log(static_cast<double>(std::max<NodeId>(n, 2))) / (gap * gap);
  const std::size_t dim = static_cast<std::size_t>(std::ceil(raw));
  return static_cast<int>(std::max<std::size_t>(1, std::min(dim, m)));
}

std::vector<ResistanceEstimate> estimate_all_resistances(const WeightedGraph& g, double alpha,
                                                         int sketch_dim, const SolverConfig& cfg,
                                                         std::uint64_t seed, SketchKind kind,
                                                         double sketch_constant) {
  if (!(alpha > 1.0)) throw config_error("estimate_all_resistances: alpha must be > 1");
  if (!g.is_connected())
    throw connectivity_error("estimate_all_resistances: graph is disconnected");

  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  const NodeId n = g.num_nodes();
  std::vector<ResistanceEstimate> out(m);
  for (std::size_t e = 0; e < m; ++e) out[e] = {edges[e].u, edges[e].v, 0.0, alpha};
  if (m == 0) return out;

  const int dim = (kind == SketchKind::identity)
                      ? static_cast<int>(m)
                      : (sketch_dim > 0 ? sketch_dim
                                        : default_sketch_dim(n, alpha, sketch_constant, m));

  // Rows of Z = Q W^{1/2} B L^+, each obtained by one Laplacian solve with
  // rhs = B^T W^{1/2} q_r. Row randomness is keyed by (seed, row).
  std::vector<Eigen::VectorXd> z(dim);
  std::exception_ptr first_error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < dim; ++r) {
    try {
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
      if (kind == SketchKind::identity) {
        const auto& e = edges[r];
        const double s = std::sqrt(e.weight);
        rhs[e.u] += s;
        rhs[e.v] -= s;
      } else {
        auto rng = make_rng(seed, std::uint64_t{0x5e7c4}, static_cast<std::uint64_t>(r));
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        std::uint64_t bits = 0;
        int left = 0;
        for (const auto& e : edges) {
          if (left == 0) {
            bits = rng();
            left = 64;
          }
          const double s = (bits & 1u) ? scale : -scale;
          bits >>= 1;
          --left;
          const double c = s * std::sqrt(e.weight);
          rhs[e.u] += c;
          rhs[e.v] -= c;
        }
      }
      z[r] = solve_laplacian(g, rhs, cfg);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  const std::int64_t ms = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) if (ms > 4096)
  for (std::int64_t e = 0; e < ms; ++e) {
    double acc = 0.0;
    for (int r = 0; r < dim; ++r) {
      const double d = z[r][edges[e].u] - z[r][edges[e].v];
      acc += d * d;
    }
    out[e].value = acc;
    if (kind == SketchKind::identity) out[e].accuracy_factor = 1.0;
  }
  return out;
}

}  // namespace sparsehfs
