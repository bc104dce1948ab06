#include "sparsehfs/hfs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "sparsehfs/dense.hpp"
#include "sparsehfs/errors.hpp"

namespace sparsehfs {

void LabelAssignment::validate() const {
  if (labeled.empty()) throw config_error("label assignment is empty");
  if (!(bound_M > 0.0)) throw config_error("label bound M must be positive");
  for (const auto& [id, y] : labeled) {
    if (id >= n) throw config_error("labeled node " + std::to_string(id) + " out of range");
    if (!std::isfinite(y) || std::abs(y) > bound_M)
      throw config_error("label value at node " + std::to_string(id) + " violates |y| <= M");
  }
}

std::pair<LabelAssignment, double> center_labels(const LabelAssignment& labels) {
  labels.validate();
  double mean = 0.0;
  for (const auto& [id, y] : labels.labeled) mean += y;
  mean /= static_cast<double>(labels.labeled.size());
  LabelAssignment out = labels;
  for (auto& [id, y] : out.labeled) y -= mean;
  // Centered values stay within M + |mean| in magnitude.
  out.bound_M = labels.bound_M + std::abs(mean);
  return {std::move(out), mean};
}

namespace {

double center_tolerance(const Eigen::VectorXd& f) {
  return 1e-6 * static_cast<double>(f.size()) * (f.lpNorm<Eigen::Infinity>() + 1.0);
}

}  // namespace

HfsSolution stable_hfs(const WeightedGraph& g, const LabelAssignment& labels, double gamma,
                       const SolverConfig& cfg) {
  labels.validate();
  const NodeId n = g.num_nodes();
  if (labels.n != n) throw dimension_error("stable_hfs: labels.n != graph n");
  if (!(gamma > 0.0)) throw config_error("stable_hfs: gamma must be positive");
  if (!g.is_connected()) throw connectivity_error("stable_hfs: graph must be connected");

  const double gl = gamma * static_cast<double>(labels.count());
  Eigen::VectorXd y_s = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd s_mask = Eigen::VectorXd::Zero(n);
  for (const auto& [id, y] : labels.labeled) {
    y_s[id] = y;
    s_mask[id] = 1.0;
  }

  // M = gamma l L + I_S is SPD on connected graphs, and f = z1 - mu z2 with
  // M z1 = y_S, M z2 = 1, mu = (z1^T 1)/(z2^T 1) is the unique centered
  // stationary point: P_F M f = P_F y_S, f in F. We solve that compressed
  // system P_F M P_F directly with re-centered CG: it has the same solution
  // and mu, but avoids carrying the O(n/l) near-nullspace component of z2
  // through the iteration, which is what ruins CG conditioning at small l.
  auto apply_m = [&](const Eigen::VectorXd& x, Eigen::VectorXd& out) {
    g.laplacian_apply(x, out);
    out *= gl;
    out.array() += s_mask.array() * x.array();
  };
  // Both projections matter: I_S maps the all-ones direction to 1_S, so an
  // unprojected input component would leak back into the centered space.
  Eigen::VectorXd projected(n);
  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& out) {
    projected = x;
    projected.array() -= projected.mean();
    apply_m(projected, out);
    out.array() -= out.mean();
  };
  Eigen::VectorXd diag;
  if (cfg.preconditioner == SolverConfig::Preconditioner::jacobi) {
    diag = gl * Eigen::Map<const Eigen::VectorXd>(g.degrees().data(), n) + s_mask;
  }

  Eigen::VectorXd y_proj = y_s;
  y_proj.array() -= y_proj.mean();

  SolveInfo info;
  HfsSolution sol;
  sol.f = detail::pcg(apply, diag, y_proj, cfg.rel_tolerance, cfg.iteration_cap(n),
                      /*recenter=*/true, &info);
  sol.gamma = gamma;
  sol.residual = info.relative_residual;
  sol.iterations = info.iterations;

  // At the optimum M f - y_S = -mu 1 exactly.
  Eigen::VectorXd mf(n);
  apply_m(sol.f, mf);
  sol.mu = (y_s - mf).mean();

  if (std::abs(sol.f.sum()) > center_tolerance(sol.f))
    throw convergence_error("stable_hfs: solution failed the centering check; tighten the solver "
                            "tolerance",
                            sol.residual, sol.iterations);
  return sol;
}

ClassVector predict_classes(const HfsSolution& sol) {
  ClassVector out(sol.f.size());
  for (Eigen::Index i = 0; i < sol.f.size(); ++i) out[i] = sol.f[i] < 0.0 ? -1 : 1;
  return out;
}

HfsSolution hfs_dense_oracle(const WeightedGraph& g, const LabelAssignment& labels, double gamma) {
  labels.validate();
  const NodeId n = g.num_nodes();
  if (n > kDenseNodeLimit)
    throw dimension_error("hfs_dense_oracle: n exceeds dense limit");
  if (labels.n != n) throw dimension_error("hfs_dense_oracle: labels.n != graph n");
  if (!g.is_connected()) throw connectivity_error("hfs_dense_oracle: graph must be connected");

  const double gl = gamma * static_cast<double>(labels.count());
  Eigen::MatrixXd lap = dense_laplacian(g);
  Eigen::MatrixXd m = gl * lap;
  Eigen::VectorXd y_s = Eigen::VectorXd::Zero(n);
  for (const auto& [id, y] : labels.labeled) {
    m(id, id) += 1.0;
    y_s[id] = y;
  }

  // P_F = L L^+ is the projection onto centered functions. The centered
  // minimizer solves the compressed system P_F M P_F f = P_F y_S with f in F,
  // which the pseudoinverse delivers directly (its range is F).
  Eigen::MatrixXd p_f = lap * pinv_psd(lap);
  Eigen::MatrixXd compressed = p_f * m * p_f;
  HfsSolution sol;
  sol.f = pinv_psd(compressed) * (p_f * y_s);
  sol.gamma = gamma;
  // M f = y_S - mu 1 at the optimum.
  sol.mu = (y_s - m * sol.f).mean();
  sol.residual = (p_f * (m * sol.f - y_s)).norm();
  sol.iterations = 0;
  return sol;
}

SparseHfsResult sparse_hfs(EdgeSource& stream, const LabelAssignment& labels, double gamma,
                           const SparsifierParams& params, const SolverConfig& cfg,
                           std::uint64_t seed) {
  StreamDiagnostics diag;
  SparsifierState state = stream_sparsify(stream, params, cfg, seed, &diag);
  auto [centered, mean] = center_labels(labels);
  HfsSolution sol = stable_hfs(state.graph(), centered, gamma, cfg);
  sol.centered_mean = mean;
  return {std::move(sol), std::move(state), std::move(diag)};
}

LabelAssignment load_labels(const std::string& path, NodeId n) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open labels file: " + path);
  LabelAssignment labels;
  labels.n = n;
  std::string line;
  std::size_t line_no = 0;
  double max_abs = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    NodeId id = 0;
    double value = 0.0;
    if (std::sscanf(line.c_str() + start, "%u %lf", &id, &value) != 2)
      throw parse_error(path + ": expected 'node_id<TAB>value' at line " + std::to_string(line_no),
                        line_no);
    if (id >= n)
      throw parse_error(path + ": node id out of range at line " + std::to_string(line_no),
                        line_no);
    labels.labeled[id] = value;
    max_abs = std::max(max_abs, std::abs(value));
  }
  if (labels.labeled.empty()) throw parse_error(path + ": no labels found");
  labels.bound_M = std::max(max_abs, 1.0);
  return labels;
}

void write_labels(const std::string& path, const LabelAssignment& labels) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw io_error("cannot open for writing: " + path);
  for (const auto& [id, y] : labels.labeled) std::fprintf(f, "%u\t%.17g\n", id, y);
  if (std::fclose(f) != 0) throw io_error("write failed: " + path);
}

void write_solution(const std::string& path, const HfsSolution& sol) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw io_error("cannot open for writing: " + path);
  ClassVector classes = predict_classes(sol);
  for (Eigen::Index i = 0; i < sol.f.size(); ++i)
    std::fprintf(f, "%lld\t%.17g\t%+d\n", static_cast<long long>(i), sol.f[i],
                 static_cast<int>(classes[i]));
  if (std::fclose(f) != 0) throw io_error("write failed: " + path);
}

}  // namespace sparsehfs
