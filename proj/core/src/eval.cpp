#include "sparsehfs/eval.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "sparsehfs/dense.hpp"
#include "sparsehfs/errors.hpp"
#include "sparsehfs/knn.hpp"
#include "sparsehfs/rng.hpp"

namespace sparsehfs {

double accuracy(const ClassVector& pred, const ClassVector& truth,
                const std::vector<NodeId>* mask) {
  if (pred.size() != truth.size()) throw dimension_error("accuracy: length mismatch");
  if (pred.empty()) throw dimension_error("accuracy: empty vectors");
  std::size_t agree = 0, total = 0;
  if (mask) {
    for (NodeId i : *mask) {
      if (i >= pred.size()) throw dimension_error("accuracy: mask index out of range");
      agree += pred[i] == truth[i];
      ++total;
    }
  } else {
    for (std::size_t i = 0; i < pred.size(); ++i) agree += pred[i] == truth[i];
    total = pred.size();
  }
  if (total == 0) throw dimension_error("accuracy: empty mask");
  return static_cast<double>(agree) / static_cast<double>(total);
}

std::pair<double, double> spectral_similarity(const WeightedGraph& g, const WeightedGraph& h,
                                              int probes, std::uint64_t seed) {
  if (g.num_nodes() != h.num_nodes())
    throw dimension_error("spectral_similarity: node counts differ");
  if (!g.is_connected()) throw connectivity_error("spectral_similarity: g must be connected");
  if (probes < 1) throw config_error("spectral_similarity: need at least one probe");

  auto rng = make_rng(seed, std::uint64_t{0x9a0b3});
  std::normal_distribution<double> normal(0.0, 1.0);
  const NodeId n = g.num_nodes();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int p = 0; p < probes; ++p) {
    double qg = 0.0;
    Eigen::VectorXd x(n);
    int retries = 0;
    for (;;) {
      for (NodeId i = 0; i < n; ++i) x[i] = normal(rng);
      x.array() -= x.mean();
      qg = g.quadratic_form(x);
      if (qg > 1e-14) break;
      if (++retries > 100)
        throw convergence_error("spectral_similarity: degenerate probes", qg, retries);
    }
    const double ratio = h.quadratic_form(x) / qg;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo, hi};
}

double edge_ratio(const WeightedGraph& h, const WeightedGraph& g) {
  if (g.num_edges() == 0) throw dimension_error("edge_ratio: reference graph has no edges");
  return static_cast<double>(h.num_edges()) / static_cast<double>(g.num_edges());
}

namespace {

/// Index of the nearest point to `i` among `candidates`, ties to lower index.
NodeId nearest_of(const Eigen::MatrixXd& pts, NodeId i, const std::vector<NodeId>& candidates) {
  double best = std::numeric_limits<double>::infinity();
  NodeId best_id = candidates.front();
  for (NodeId c : candidates) {
    const double d2 = (pts.row(i) - pts.row(c)).squaredNorm();
    if (d2 < best) {
      best = d2;
      best_id = c;
    }
  }
  return best_id;
}

std::int8_t to_class(double y) { return y < 0.0 ? -1 : 1; }

}  // namespace

ClassVector baseline_1nn(const Dataset& data, const LabelAssignment& labels) {
  labels.validate();
  if (labels.n != data.size()) throw dimension_error("baseline_1nn: labels.n != dataset size");
  std::vector<NodeId> labeled_ids;
  for (const auto& [id, y] : labels.labeled) labeled_ids.push_back(id);

  ClassVector out(data.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(data.size()); ++i) {
    const NodeId nearest = nearest_of(data.points, static_cast<NodeId>(i), labeled_ids);
    out[i] = to_class(labels.labeled.at(nearest));
  }
  return out;
}

ClassVector baseline_subsampling(const Dataset& data, const LabelAssignment& labels,
                                 std::int64_t s, int k, double gamma, std::uint64_t seed,
                                 const SolverConfig& cfg, bool* warned) {
  labels.validate();
  const NodeId n = data.size();
  if (labels.n != n) throw dimension_error("baseline_subsampling: labels.n != dataset size");
  if (s < 1 || s > static_cast<std::int64_t>(n))
    throw config_error("baseline_subsampling: s must be in [1, n]");
  if (warned) *warned = false;

  // Uniform sample of s nodes, plus every labeled node.
  std::vector<NodeId> all(n);
  for (NodeId i = 0; i < n; ++i) all[i] = i;
  std::vector<NodeId> sampled;
  auto rng = make_rng(seed, std::uint64_t{0x50b5});
  std::sample(all.begin(), all.end(), std::back_inserter(sampled), static_cast<std::size_t>(s),
              rng);
  std::set<NodeId> sample_set(sampled.begin(), sampled.end());
  for (const auto& [id, y] : labels.labeled) sample_set.insert(id);
  std::vector<NodeId> sample(sample_set.begin(), sample_set.end());

  // Nodes the HFS solve will cover; starts as the whole sample and may shrink
  // to the largest labeled component.
  std::vector<NodeId> solved = sample;
  ClassVector solved_classes;

  const int k_eff = std::min<int>(k, static_cast<int>(sample.size()) - 1);
  if (sample.size() >= 2 && k_eff >= 1) {
    Dataset sub;
    sub.points.resize(sample.size(), data.dim());
    for (std::size_t i = 0; i < sample.size(); ++i) sub.points.row(i) = data.points.row(sample[i]);

    KnnConfig knn_cfg;
    knn_cfg.k = k_eff;
    auto edges = build_knn_graph(sub, knn_cfg);
    WeightedGraph sub_graph(static_cast<NodeId>(sample.size()), std::move(edges));

    std::vector<NodeId> local_of(n, 0);
    for (std::size_t i = 0; i < sample.size(); ++i) local_of[sample[i]] = static_cast<NodeId>(i);

    std::vector<NodeId> comp;
    NodeId comp_count = 1;
    std::vector<NodeId> keep_local(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) keep_local[i] = static_cast<NodeId>(i);

    if (!sub_graph.is_connected()) {
      if (warned) *warned = true;
      std::tie(comp, comp_count) = connected_components(sub_graph);
      // Largest component that contains at least one labeled node.
      std::vector<std::int64_t> size(comp_count, 0), has_label(comp_count, 0);
      for (std::size_t i = 0; i < sample.size(); ++i) ++size[comp[i]];
      for (const auto& [id, y] : labels.labeled) has_label[comp[local_of[id]]] = 1;
      NodeId best = 0;
      std::int64_t best_size = -1;
      for (NodeId c = 0; c < comp_count; ++c)
        if (has_label[c] && size[c] > best_size) {
          best = c;
          best_size = size[c];
        }
      keep_local.clear();
      for (std::size_t i = 0; i < sample.size(); ++i)
        if (comp[i] == best) keep_local.push_back(static_cast<NodeId>(i));
    }

    if (keep_local.size() >= 2) {
      // Re-index the kept nodes and solve there.
      std::vector<NodeId> compact(sample.size(), 0);
      for (std::size_t i = 0; i < keep_local.size(); ++i) compact[keep_local[i]] = static_cast<NodeId>(i);
      std::vector<WeightedEdge> kept_edges;
      std::vector<bool> kept_mask(sample.size(), false);
      for (NodeId i : keep_local) kept_mask[i] = true;
      for (const auto& e : sub_graph.edges())
        if (kept_mask[e.u] && kept_mask[e.v]) kept_edges.push_back({compact[e.u], compact[e.v], e.weight});
      WeightedGraph solve_graph(static_cast<NodeId>(keep_local.size()), std::move(kept_edges));

      LabelAssignment sub_labels;
      sub_labels.n = solve_graph.num_nodes();
      sub_labels.bound_M = labels.bound_M;
      for (const auto& [id, y] : labels.labeled) {
        const NodeId local = local_of[id];
        if (kept_mask[local]) sub_labels.labeled[compact[local]] = y;
      }

      solved.clear();
      for (NodeId i : keep_local) solved.push_back(sample[i]);

      auto [centered, mean] = center_labels(sub_labels);
      HfsSolution sol = stable_hfs(solve_graph, centered, gamma, cfg);
      solved_classes = predict_classes(sol);
    }
  }

  if (solved_classes.empty()) {
    // No usable structure; the solved set degenerates to the labeled nodes.
    if (warned) *warned = true;
    solved.clear();
    solved_classes.clear();
    for (const auto& [id, y] : labels.labeled) {
      solved.push_back(id);
      solved_classes.push_back(to_class(y));
    }
  }

  // Out-of-sample nodes copy the predicted class of the nearest solved node.
  std::vector<std::int8_t> class_of(n, 0);
  std::vector<bool> in_solved(n, false);
  for (std::size_t i = 0; i < solved.size(); ++i) {
    class_of[solved[i]] = solved_classes[i];
    in_solved[solved[i]] = true;
  }
  ClassVector out(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    if (in_solved[i]) {
      out[i] = class_of[i];
    } else {
      out[i] = class_of[nearest_of(data.points, static_cast<NodeId>(i), solved)];
    }
  }
  return out;
}

BoundResult theorem1_bound(const BoundInputs& in) {
  if (in.l < 1 || in.u < 1) throw config_error("theorem1_bound: l and u must be positive");
  if (!(in.gamma > 0.0) || !(in.lambda2 > 0.0) || !(in.lambda_n > 0.0) || !(in.bound_M > 0.0) ||
      !(in.c > 0.0))
    throw config_error("theorem1_bound: gamma, lambda2, lambda_n, M, c must be positive");
  if (!(in.epsilon >= 0.0 && in.epsilon < 1.0))
    throw config_error("theorem1_bound: epsilon must be in [0,1)");
  if (!(in.delta > 0.0 && in.delta < 1.0))
    throw config_error("theorem1_bound: delta must be in (0,1)");
  if (in.empirical_error < 0.0) throw config_error("theorem1_bound: empirical error negative");

  const double l = static_cast<double>(in.l);
  const double u = static_cast<double>(in.u);
  const double denom = l * in.gamma * (1.0 - in.epsilon) * in.lambda2 - 1.0;
  if (!(denom > 0.0))
    throw bound_undefined_error(
        "theorem1_bound: l*gamma*(1-eps)*lambda2 must exceed 1 for the bound to be finite");

  const double big = std::max(l, u);
  BoundResult out;
  out.pi_lu = (l * u / (l + u - 0.5)) * (2.0 * big / (2.0 * big - 1.0));
  out.beta = 1.5 * in.bound_M * std::sqrt(l) / (denom * denom) + 4.0 * in.bound_M / denom;
  const double sparsification = l * l * in.gamma * in.gamma * in.lambda_n * in.lambda_n *
                                in.bound_M * in.bound_M * in.epsilon * in.epsilon /
                                (denom * denom * denom * denom);
  const double slack = (2.0 * out.beta + in.c * in.c * (l + u) / (l * u)) *
                       std::sqrt(out.pi_lu * std::log(1.0 / in.delta) / 2.0);
  out.bound = in.empirical_error + sparsification + out.beta + slack;
  return out;
}

EigenExtremes graph_eigen_extremes(const WeightedGraph& g) {
  const NodeId n = g.num_nodes();
  if (n < 2) throw dimension_error("graph_eigen_extremes: need n >= 2");
  if (n > kDenseNodeLimit) return graph_eigen_extremes_iterative(g);
  EigenExtremes out;
  out.disconnected = !g.is_connected();
  Eigen::VectorXd vals = dense_laplacian_eigenvalues(g);
  out.lambda2 = std::max(vals[1], 0.0);
  out.lambda_n = std::max(vals[n - 1], 0.0);
  if (out.disconnected) out.lambda2 = 0.0;
  return out;
}

EigenExtremes graph_eigen_extremes_iterative(const WeightedGraph& g) {
  const NodeId n = g.num_nodes();
  EigenExtremes out;
  out.disconnected = !g.is_connected();
  if (n < 2) throw dimension_error("graph_eigen_extremes: need n >= 2");

  // Power iteration with the all-ones direction deflated; diagnostics-grade.
  constexpr double kTol = 1e-6;
  constexpr int kMaxIter = 20000;
  auto rng = make_rng(std::uint64_t{0xe16e});
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd x(n), y(n);
  for (NodeId i = 0; i < n; ++i) x[i] = normal(rng);
  x.array() -= x.mean();
  x.normalize();

  double lambda = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    g.laplacian_apply(x, y);
    y.array() -= y.mean();
    const double next = x.dot(y);
    const double norm = y.norm();
    if (norm == 0.0) break;
    y /= norm;
    const bool done = std::abs(next - lambda) <= kTol * std::max(1.0, std::abs(next));
    lambda = next;
    x.swap(y);
    if (done && it > 2) break;
  }
  out.lambda_n = lambda;

  if (out.disconnected) {
    out.lambda2 = 0.0;
    return out;
  }

  // lambda2 via the shifted operator s I - L restricted to mean-zero vectors.
  const double shift = 1.01 * out.lambda_n;
  for (NodeId i = 0; i < n; ++i) x[i] = normal(rng);
  x.array() -= x.mean();
  x.normalize();
  double nu = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    g.laplacian_apply(x, y);
    y = shift * x - y;
    y.array() -= y.mean();
    const double next = x.dot(y);
    const double norm = y.norm();
    if (norm == 0.0) break;
    y /= norm;
    const bool done = std::abs(next - nu) <= kTol * std::max(1.0, std::abs(next));
    nu = next;
    x.swap(y);
    if (done && it > 2) break;
  }
  out.lambda2 = std::max(shift - nu, 0.0);
  return out;
}

}  // namespace sparsehfs
