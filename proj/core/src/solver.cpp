#include "sparsehfs/solver.hpp"

namespace sparsehfs {

Eigen::VectorXd solve_laplacian(const WeightedGraph& g, const Eigen::VectorXd& b,
                                const SolverConfig& cfg, SolveInfo* info) {
  const NodeId n = g.num_nodes();
  if (b.size() != static_cast<Eigen::Index>(n))
    throw dimension_error("solve_laplacian: rhs length mismatch");
  if (!g.is_connected())
    throw connectivity_error("solve_laplacian: graph is disconnected, Laplacian system is singular");

  Eigen::VectorXd b_proj = b;
  b_proj.array() -= b_proj.mean();

  Eigen::VectorXd diag;
  if (cfg.preconditioner == SolverConfig::Preconditioner::jacobi) {
    diag = Eigen::Map<const Eigen::VectorXd>(g.degrees().data(), n);
  }
  auto apply = [&g](const Eigen::VectorXd& x, Eigen::VectorXd& y) { g.laplacian_apply(x, y); };
  return detail::pcg(apply, diag, b_proj, cfg.rel_tolerance, cfg.iteration_cap(n),
                     /*recenter=*/true, info);
}

}  // namespace sparsehfs
