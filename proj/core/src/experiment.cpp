#include "sparsehfs/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <ostream>
#include <random>

#include "sparsehfs/dense.hpp"
#include "sparsehfs/errors.hpp"
#include "sparsehfs/eval.hpp"
#include "sparsehfs/rng.hpp"

namespace sparsehfs {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

LabelAssignment csv_labeled_set(const Dataset& data, std::int64_t count, std::uint64_t seed) {
  if (data.truth_labels.empty())
    throw config_error("experiment: csv mode needs a label column for evaluation");
  if (count < 2 || count > static_cast<std::int64_t>(data.size()))
    throw config_error("experiment: labeled_count out of range");
  std::vector<NodeId> all(data.size());
  for (NodeId i = 0; i < data.size(); ++i) all[i] = i;
  auto rng = make_rng(seed, std::uint64_t{0xc5f});
  // Redraw a few times if the sample came out single-class.
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<NodeId> chosen;
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), static_cast<std::size_t>(count),
                rng);
    bool pos = false, neg = false;
    for (NodeId i : chosen) (data.truth_labels[i] > 0 ? pos : neg) = true;
    if (pos && neg) {
      LabelAssignment labels;
      labels.n = data.size();
      labels.bound_M = 1.0;
      for (NodeId i : chosen) labels.labeled[i] = static_cast<double>(data.truth_labels[i]);
      return labels;
    }
  }
  throw config_error("experiment: could not draw a two-class labeled set");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (k_values.empty()) throw config_error("experiment: no k values");
  if (features_csv.empty() && n < 4) throw config_error("experiment: n too small");
  if (seeds.empty()) throw config_error("experiment: no seeds");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw config_error("experiment: eps must be in (0,1)");
  if (!(gamma > 0.0)) throw config_error("experiment: gamma must be positive");
  if (jobs < 1) throw config_error("experiment: jobs must be >= 1");
  if (weight_mode == KnnWeightMode::exponential && !(sigma2 > 0.0))
    throw config_error("experiment: exponential weights need sigma2 > 0");
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg, std::ostream* progress) {
  cfg.validate();

  GeneratedData gen;
  Dataset* data = nullptr;
  Dataset csv_data;
  const bool synthetic = cfg.features_csv.empty();
  if (synthetic) {
    gen = generate_four_clusters(cfg.n, cfg.data_seed, cfg.cluster_spread);
    data = &gen.data;
  } else {
    csv_data = load_feature_csv(cfg.features_csv);
    data = &csv_data;
  }
  const NodeId n = data->size();
  const ClassVector& truth = data->truth_labels;

  SolverConfig solver_cfg;
  solver_cfg.rel_tolerance = cfg.solver_tolerance;
  solver_cfg.max_iterations = cfg.max_iterations;

  std::vector<ExperimentRow> rows;
  for (int k : cfg.k_values) {
    auto t_build = Clock::now();
    KnnConfig knn_cfg;
    knn_cfg.k = k;
    knn_cfg.mode = cfg.weight_mode;
    knn_cfg.sigma2 = cfg.sigma2;
    knn_cfg.weight_form = cfg.weight_form;
    std::vector<WeightedEdge> edges = build_knn_graph(*data, knn_cfg);
    WeightedGraph g(n, edges);  // edges kept: the sparse runs stream them
    const std::int64_t m = static_cast<std::int64_t>(g.num_edges());
    if (progress)
      *progress << "k=" << k << ": m=" << m << (g.is_connected() ? "" : " (disconnected)")
                << ", knn build " << ms_since(t_build) / 1000.0 << " s\n";

    double lambda2 = std::numeric_limits<double>::quiet_NaN();
    double lambda_n = std::numeric_limits<double>::quiet_NaN();
    if (cfg.compute_spectrum) {
      EigenExtremes ee = graph_eigen_extremes(g);
      lambda2 = ee.lambda2;
      lambda_n = ee.lambda_n;
    }

    auto run_seed = [&](std::uint64_t seed) {
      std::vector<ExperimentRow> out;
      LabelAssignment labels = synthetic
                                   ? select_labeled_set(gen, cfg.labels_per_extreme, seed)
                                   : csv_labeled_set(*data, cfg.labeled_count, seed);
      const std::int64_t l = static_cast<std::int64_t>(labels.count());

      ExperimentRow base;
      base.k = k;
      base.eps = cfg.epsilon;
      base.gamma = cfg.gamma;
      base.seed = seed;
      base.l = l;
      base.edges_g = m;
      base.lambda2 = lambda2;
      base.lambda_n = lambda_n;

      double stable_empirical_error = std::numeric_limits<double>::quiet_NaN();
      if (cfg.run_stable && g.is_connected()) {
        auto t0 = Clock::now();
        auto [centered, mean] = center_labels(labels);
        HfsSolution sol = stable_hfs(g, centered, cfg.gamma, solver_cfg);
        sol.centered_mean = mean;
        ExperimentRow row = base;
        row.method = "stable";
        row.accuracy = accuracy(predict_classes(sol), truth);
        row.edges_h = m;
        row.edge_ratio = 1.0;
        row.peak_edges = m;
        row.wall_ms = ms_since(t0);
        if (cfg.compute_spectrum) {
          double err = 0.0;
          for (const auto& [id, y] : centered.labeled) {
            const double d = sol.f[id] - y;
            err += d * d;
          }
          stable_empirical_error = err / static_cast<double>(l);
          BoundInputs bi{l,      static_cast<std::int64_t>(n) - l,
                         cfg.gamma, 0.0,
                         lambda2,   lambda_n,
                         labels.bound_M, cfg.bound_c,
                         cfg.bound_delta, stable_empirical_error};
          try {
            row.bound = theorem1_bound(bi).bound;
          } catch (const bound_undefined_error&) {
          }
        }
        out.push_back(row);
      }

      if (cfg.run_sparse && g.is_connected()) try {
        auto t0 = Clock::now();
        SparsifierParams params;
        params.epsilon = cfg.epsilon;
        params.n = n;
        params.budget = cfg.budget;
        params.budget_mode = cfg.budget_mode;
        params.budget_constant = cfg.budget_constant;
        params.block_size = cfg.block_size;
        params.resistance = cfg.resistance;
        params.sketch_dim = cfg.sketch_dim;
        params.sketch_constant = cfg.sketch_constant;
        params.resistance_tolerance = cfg.resistance_tolerance;

        SparseHfsResult result = [&] {
          if (cfg.shuffle_stream) {
            std::vector<WeightedEdge> shuffled = edges;
            auto rng = make_rng(cfg.shuffle_seed, seed);
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            VectorEdgeSource src(n, shuffled);
            return sparse_hfs(src, labels, cfg.gamma, params, solver_cfg, seed);
          }
          VectorEdgeSource src(n, edges);
          return sparse_hfs(src, labels, cfg.gamma, params, solver_cfg, seed);
        }();

        ExperimentRow row = base;
        row.method = "sparse";
        row.accuracy = accuracy(predict_classes(result.solution), truth);
        row.edges_h = static_cast<std::int64_t>(result.sparsifier.distinct_edges());
        row.edge_ratio = static_cast<double>(row.edges_h) / static_cast<double>(m);
        row.peak_edges = static_cast<std::int64_t>(result.stream.peak_memory_edges);
        row.wall_ms = ms_since(t0);
        if (cfg.compute_spectrum && std::isfinite(stable_empirical_error)) {
          BoundInputs bi{l,      static_cast<std::int64_t>(n) - l,
                         cfg.gamma, cfg.epsilon,
                         lambda2,   lambda_n,
                         labels.bound_M, cfg.bound_c,
                         cfg.bound_delta, stable_empirical_error};
          try {
            row.bound = theorem1_bound(bi).bound;
          } catch (const bound_undefined_error&) {
          }
        }
        out.push_back(row);
      } catch (const connectivity_error&) {
        // The sampled sparsifier can disconnect on skeletal graphs; record
        // nothing for this (k, seed) rather than aborting the sweep.
      }

      if (cfg.run_subsampling) {
        auto t0 = Clock::now();
        const std::int64_t s = cfg.subsample_s > 0 ? cfg.subsample_s
                                                   : std::max<std::int64_t>(l + 1, n / 8);
        bool warned = false;
        ClassVector pred =
            baseline_subsampling(*data, labels, s, k, cfg.gamma, seed, solver_cfg, &warned);
        ExperimentRow row = base;
        row.method = "subsampling";
        row.accuracy = accuracy(pred, truth);
        row.edges_h = 0;
        row.edge_ratio = 0.0;
        row.peak_edges = s;
        row.wall_ms = ms_since(t0);
        out.push_back(row);
      }

      if (cfg.run_1nn) {
        auto t0 = Clock::now();
        ExperimentRow row = base;
        row.method = "1nn";
        row.accuracy = accuracy(baseline_1nn(*data, labels), truth);
        row.edges_h = 0;
        row.edge_ratio = 0.0;
        row.peak_edges = l;
        row.wall_ms = ms_since(t0);
        out.push_back(row);
      }
      return out;
    };

    if (cfg.jobs <= 1 || cfg.seeds.size() == 1) {
      for (std::uint64_t seed : cfg.seeds) {
        auto batch = run_seed(seed);
        rows.insert(rows.end(), batch.begin(), batch.end());
      }
    } else {
      // Seed-level parallelism; rows appended in seed order either way.
      std::vector<std::future<std::vector<ExperimentRow>>> futures;
      std::vector<std::vector<ExperimentRow>> batches(cfg.seeds.size());
      std::size_t next = 0;
      while (next < cfg.seeds.size()) {
        const std::size_t begin = next;
        const std::size_t end = std::min(cfg.seeds.size(), begin + static_cast<std::size_t>(cfg.jobs));
        futures.clear();
        for (std::size_t i = begin; i < end; ++i)
          futures.push_back(std::async(std::launch::async, run_seed, cfg.seeds[i]));
        for (std::size_t i = begin; i < end; ++i) batches[i] = futures[i - begin].get();
        next = end;
      }
      for (auto& batch : batches) rows.insert(rows.end(), batch.begin(), batch.end());
    }
    if (progress) *progress << "k=" << k << ": done\n";
  }
  return rows;
}

std::string experiment_csv_header() {
  return "method,k,eps,gamma,seed,l,accuracy,edges_H,edges_G,edge_ratio,wall_ms,peak_edges,"
         "lambda2,lambda_n,bound";
}

std::string experiment_csv_row(const ExperimentRow& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%s,%d,%.17g,%.17g,%llu,%lld,%.17g,%lld,%lld,%.17g,%.3f,%lld,%.17g,%.17g,%.17g",
                r.method.c_str(), r.k, r.eps, r.gamma, static_cast<unsigned long long>(r.seed),
                static_cast<long long>(r.l), r.accuracy, static_cast<long long>(r.edges_h),
                static_cast<long long>(r.edges_g), r.edge_ratio, r.wall_ms,
                static_cast<long long>(r.peak_edges), r.lambda2, r.lambda_n, r.bound);
  return buf;
}

void write_experiment_csv(const std::string& path, const std::vector<ExperimentRow>& rows) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw io_error("cannot open for writing: " + path);
  std::fprintf(f, "%s\n", experiment_csv_header().c_str());
  for (const auto& r : rows) std::fprintf(f, "%s\n", experiment_csv_row(r).c_str());
  if (std::fclose(f) != 0) throw io_error("write failed: " + path);
}

}  // namespace sparsehfs
