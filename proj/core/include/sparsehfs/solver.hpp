#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "sparsehfs/errors.hpp"
#include "sparsehfs/graph.hpp"

namespace sparsehfs {

struct SolverConfig {
  double rel_tolerance = 1e-8;
  /// 0 means "auto": 10 * n.
  int max_iterations = 0;
  enum class Preconditioner { none, jacobi };
  Preconditioner preconditioner = Preconditioner::jacobi;

  int iteration_cap(NodeId n) const {
    return max_iterations > 0 ? max_iterations : static_cast<int>(10 * static_cast<std::int64_t>(n));
  }
};

struct SolveInfo {
  int iterations = 0;
  double relative_residual = 0.0;
};

/// Solves L x = b on range(L) for a connected graph.
///
/// b is projected to mean zero internally; the returned x satisfies x ⊥ 1 and
/// ||L x - b_proj|| <= rel_tolerance * ||b_proj||, i.e. x = L^+ b_proj up to
/// tolerance. Iterates are re-centered every iteration so rounding drift along
/// the all-ones nullspace cannot accumulate.
///
/// Throws connectivity_error on disconnected graphs and convergence_error
/// (carrying the last relative residual) when the iteration cap is hit.
Eigen::VectorXd solve_laplacian(const WeightedGraph& g, const Eigen::VectorXd& b,
                                const SolverConfig& cfg = {}, SolveInfo* info = nullptr);

namespace detail {

/// Preconditioned conjugate gradient on an SPD (or PSD-with-known-nullspace)
/// operator. `diag` is the Jacobi preconditioner diagonal; pass an empty
/// vector for no preconditioning. With `recenter`, x and r are projected off
/// the all-ones vector every iteration.
template <typename Op>
Eigen::VectorXd pcg(Op&& apply, const Eigen::VectorXd& diag, const Eigen::VectorXd& b,
                    double rel_tol, int max_iter, bool recenter, SolveInfo* info) {
  const Eigen::Index n = b.size();
  const bool precond = diag.size() > 0;
  const double b_norm = b.norm();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  if (b_norm == 0.0) {
    if (info) *info = {0, 0.0};
    return x;
  }

  Eigen::VectorXd r = b;
  Eigen::VectorXd z = precond ? (r.array() / diag.array()).matrix() : r;
  Eigen::VectorXd p = z;
  Eigen::VectorXd ap(n);
  double rz = r.dot(z);
  double res = r.norm() / b_norm;
  int it = 0;
  for (; it < max_iter && res > rel_tol; ++it) {
    apply(p, ap);
    const double pap = p.dot(ap);
    if (!(pap > 0.0)) break;  // lost positive definiteness numerically
    const double alpha = rz / pap;
    x += alpha * p;
    r -= alpha * ap;
    if (recenter) {
      x.array() -= x.mean();
      r.array() -= r.mean();
    }
    res = r.norm() / b_norm;
    if (res <= rel_tol) {
      ++it;
      break;
    }
    if (precond) z = (r.array() / diag.array()).matrix();
    const double rz_next = precond ? r.dot(z) : r.squaredNorm();
    const double beta = rz_next / rz;
    rz = rz_next;
    if (precond)
      p = z + beta * p;
    else
      p = r + beta * p;
  }
  if (info) *info = {it, res};
  if (res > rel_tol)
    throw convergence_error("pcg: no convergence after " + std::to_string(it) +
                                " iterations (relative residual " + std::to_string(res) + ")",
                            res, it);
  return x;
}

}  // namespace detail
}  // namespace sparsehfs
