// sparsehfs: streaming spectral sparsification and Stable-HFS semi-supervised
// solving over edge-list files. Subcommands cover the synthetic data
// generator, knn graph construction, sparsification, solving, the combined
// pipeline, and batch experiment sweeps.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "sparsehfs/datagen.hpp"
#include "sparsehfs/dataset.hpp"
#include "sparsehfs/edge_list_io.hpp"
#include "sparsehfs/errors.hpp"
#include "sparsehfs/eval.hpp"
#include "sparsehfs/experiment.hpp"
#include "sparsehfs/graph.hpp"
#include "sparsehfs/hfs.hpp"
#include "sparsehfs/knn.hpp"
#include "sparsehfs/rng.hpp"
#include "sparsehfs/sparsifier.hpp"

namespace {

using namespace sparsehfs;
using nlohmann::json;

// Exit codes: 0 success, 2 usage/config, 3 I/O, 4 input parse, 5 computation.
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitParse = 4;
constexpr int kExitCompute = 5;

std::int64_t now_unix_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

void write_json(const std::string& path, const json& j) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw io_error("cannot open for writing: " + path);
  const std::string text = j.dump(2);
  std::fwrite(text.data(), 1, text.size(), f);
  std::fputc('\n', f);
  if (std::fclose(f) != 0) throw io_error("write failed: " + path);
}

template <typename T>
std::vector<T> parse_list(const std::string& csv, const char* what) {
  std::vector<T> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::stringstream conv(item);
    T value;
    if (!(conv >> value)) throw config_error(std::string("bad ") + what + " list entry: " + item);
    out.push_back(value);
  }
  if (out.empty()) throw config_error(std::string("empty ") + what + " list");
  return out;
}

struct BudgetFlag {
  std::string text = "practical";
  void apply(SparsifierParams& params) const {
    if (text == "practical") {
      params.budget_mode = BudgetMode::practical;
    } else if (text == "theory") {
      params.budget_mode = BudgetMode::theory;
    } else {
      std::stringstream conv(text);
      std::int64_t value = 0;
      if (!(conv >> value) || value <= 0)
        throw config_error("--budget must be 'practical', 'theory' or a positive integer");
      params.budget = value;
    }
  }
};

ResistanceMode parse_resistance(const std::string& text) {
  if (text == "sketch") return ResistanceMode::sketched;
  if (text == "exact") return ResistanceMode::exact;
  if (text == "cap") return ResistanceMode::capped;
  throw config_error("--resistance must be one of sketch|exact|cap");
}

KnnWeightMode parse_weight_mode(const std::string& text) {
  if (text == "unweighted") return KnnWeightMode::unweighted;
  if (text == "exponential") return KnnWeightMode::exponential;
  throw config_error("--mode must be unweighted|exponential");
}

KnnWeightForm parse_weight_form(const std::string& text) {
  if (text == "half") return KnnWeightForm::half;
  if (text == "plain") return KnnWeightForm::plain;
  throw config_error("--weight-form must be half (exp(-d/(2s2))) or plain (exp(-d/s2))");
}

KnnSymmetrization parse_sym(const std::string& text) {
  if (text == "union") return KnnSymmetrization::union_of_neighbors;
  if (text == "mutual") return KnnSymmetrization::mutual;
  throw config_error("--sym must be union|mutual");
}

void write_solution_sidecar(const std::string& solution_path, const HfsSolution& sol) {
  json j;
  j["mu"] = sol.mu;
  j["gamma"] = sol.gamma;
  j["residual"] = sol.residual;
  j["iterations"] = sol.iterations;
  j["centered_mean"] = sol.centered_mean;
  write_json(solution_path + ".json", j);
}

json stream_diag_json(const StreamDiagnostics& diag) {
  json j;
  j["edges_seen"] = diag.edges_seen;
  j["blocks"] = diag.blocks;
  j["distinct_edges"] = diag.distinct_edges;
  j["peak_memory_edges"] = diag.peak_memory_edges;
  j["per_block_timings_ms"] = diag.per_block_ms;
  j["disconnected_blocks"] = diag.disconnected_blocks;
  j["generated_unix_ms"] = now_unix_ms();
  return j;
}

// --- datagen ---------------------------------------------------------------

struct DatagenOpts {
  std::int64_t n = 12100;
  std::uint64_t seed = 1;
  std::int64_t per_extreme = 2;
  double spread = kDefaultClusterSpread;
  std::string out_csv;
  std::string labels_out;
};

void run_datagen(const DatagenOpts& o) {
  GeneratedData gen = generate_four_clusters(o.n, o.seed, o.spread);
  write_feature_csv(o.out_csv, gen.data);
  if (!o.labels_out.empty()) {
    LabelAssignment labels = select_labeled_set(gen, o.per_extreme, o.seed);
    write_labels(o.labels_out, labels);
  }
}

// --- knn-build --------------------------------------------------------------

struct KnnBuildOpts {
  std::string in_csv;
  std::string out_edges;
  int k = 10;
  std::string mode = "unweighted";
  double sigma2 = 0.0;
  std::string weight_form = "half";
  std::string sym = "union";
};

void run_knn_build(const KnnBuildOpts& o) {
  Dataset data = load_feature_csv(o.in_csv);
  KnnConfig cfg;
  cfg.k = o.k;
  cfg.mode = parse_weight_mode(o.mode);
  cfg.sigma2 = o.sigma2;
  cfg.weight_form = parse_weight_form(o.weight_form);
  cfg.sym = parse_sym(o.sym);
  auto edges = build_knn_graph(data, cfg);
  write_edge_list(o.out_edges, data.size(), edges);
}

// --- shared sparsifier option block -----------------------------------------

struct SparsifierOpts {
  double eps = 0.5;
  BudgetFlag budget;
  double budget_constant = 1.0;
  std::int64_t block_size = 0;
  std::string resistance = "sketch";
  int sketch_dim = 0;
  double sketch_constant = 24.0;
  double resistance_tol = 0.0;

  SparsifierParams params(NodeId n) const {
    SparsifierParams p;
    p.epsilon = eps;
    p.n = n;
    budget.apply(p);
    p.budget_constant = budget_constant;
    p.block_size = block_size;
    p.resistance = parse_resistance(resistance);
    p.sketch_dim = sketch_dim;
    p.sketch_constant = sketch_constant;
    p.resistance_tolerance = resistance_tol;
    return p;
  }
};

void add_sparsifier_options(CLI::App* cmd, SparsifierOpts& o) {
  cmd->add_option("--eps", o.eps, "Sparsifier accuracy epsilon in (0,1)")
      ->envname("SPARSEHFS_EPS");
  cmd->add_option("--budget", o.budget.text,
                  "Sample budget N: 'practical' (c_N n ln^2(n)/eps^2), 'theory' "
                  "(a^2 n ln^2(n)/eps^2) or an integer")
      ->envname("SPARSEHFS_BUDGET");
  cmd->add_option("--budget-constant", o.budget_constant, "c_N for the practical budget");
  cmd->add_option("--block-size", o.block_size, "Stream block size (default: budget N)");
  cmd->add_option("--resistance", o.resistance,
                  "Resistance estimates: sketch|exact|cap (cap = passthrough diagnostic)");
  cmd->add_option("--sketch-dim", o.sketch_dim, "Sketch rows (0 = auto)");
  cmd->add_option("--sketch-constant", o.sketch_constant, "C in C ln(n)/(1-1/a)^2");
  cmd->add_option("--resistance-tol", o.resistance_tol,
                  "Looser solver tolerance for resistance estimation (0 = --tol)");
}

struct SolverOpts {
  double tol = 1e-8;
  int max_iterations = 0;

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.rel_tolerance = tol;
    cfg.max_iterations = max_iterations;
    return cfg;
  }
};

void add_solver_options(CLI::App* cmd, SolverOpts& o) {
  cmd->add_option("--tol", o.tol, "Relative solver tolerance");
  cmd->add_option("--max-iterations", o.max_iterations, "CG iteration cap (0 = 10n)");
}

// --- sparsify ----------------------------------------------------------------

struct SparsifyOpts {
  std::string in_edges;
  std::string out_edges;
  std::string diag_path;
  SparsifierOpts sparsifier;
  SolverOpts solver;
  std::uint64_t seed = 1;
  std::uint64_t shuffle_seed = 0;
  bool shuffle = false;
};

void run_sparsify(const SparsifyOpts& o) {
  StreamDiagnostics diag;
  SparsifierState state = [&] {
    if (o.shuffle) {
      // Shuffling requires materializing the stream; the single-pass
      // contract only holds without --shuffle.
      EdgeListData data = read_edge_list(o.in_edges);
      auto rng = make_rng(o.shuffle_seed);
      std::shuffle(data.edges.begin(), data.edges.end(), rng);
      VectorEdgeSource src(data.n, data.edges);
      return stream_sparsify(src, o.sparsifier.params(data.n), o.solver.config(), o.seed, &diag);
    }
    EdgeListFileSource src(o.in_edges);
    return stream_sparsify(src, o.sparsifier.params(src.num_nodes()), o.solver.config(), o.seed,
                           &diag);
  }();

  write_edge_list(o.out_edges, state.num_nodes(), state.graph().edges());
  if (!o.diag_path.empty()) write_json(o.diag_path, stream_diag_json(diag));
}

// --- solve -------------------------------------------------------------------

struct SolveOpts {
  std::string in_edges;
  std::string labels_path;
  std::string out_solution;
  double gamma = 1.0;
  SolverOpts solver;
};

void run_solve(const SolveOpts& o) {
  WeightedGraph g = read_graph(o.in_edges);
  LabelAssignment labels = load_labels(o.labels_path, g.num_nodes());
  auto [centered, mean] = center_labels(labels);
  HfsSolution sol = stable_hfs(g, centered, o.gamma, o.solver.config());
  sol.centered_mean = mean;
  write_solution(o.out_solution, sol);
  write_solution_sidecar(o.out_solution, sol);
}

// --- pipeline ----------------------------------------------------------------

struct PipelineOpts {
  std::string in_edges;
  std::string in_csv;
  KnnBuildOpts knn;  // used in csv mode
  std::string labels_path;
  std::string out_solution;
  std::string out_sparsifier;
  std::string diag_path;
  double gamma = 1.0;
  SparsifierOpts sparsifier;
  SolverOpts solver;
  std::uint64_t seed = 1;
};

void run_pipeline(const PipelineOpts& o) {
  if (o.in_edges.empty() == o.in_csv.empty())
    throw config_error("pipeline: exactly one of --in / --in-csv is required");

  std::vector<WeightedEdge> csv_edges;
  NodeId n = 0;
  std::unique_ptr<EdgeSource> src;
  if (!o.in_csv.empty()) {
    Dataset data = load_feature_csv(o.in_csv);
    KnnConfig cfg;
    cfg.k = o.knn.k;
    cfg.mode = parse_weight_mode(o.knn.mode);
    cfg.sigma2 = o.knn.sigma2;
    cfg.weight_form = parse_weight_form(o.knn.weight_form);
    cfg.sym = parse_sym(o.knn.sym);
    csv_edges = build_knn_graph(data, cfg);
    n = data.size();
    src = std::make_unique<VectorEdgeSource>(n, csv_edges);
  } else {
    auto file_src = std::make_unique<EdgeListFileSource>(o.in_edges);
    n = file_src->num_nodes();
    src = std::move(file_src);
  }

  LabelAssignment labels = load_labels(o.labels_path, n);
  SparseHfsResult result =
      sparse_hfs(*src, labels, o.gamma, o.sparsifier.params(n), o.solver.config(), o.seed);

  write_solution(o.out_solution, result.solution);
  write_solution_sidecar(o.out_solution, result.solution);
  if (!o.out_sparsifier.empty())
    write_edge_list(o.out_sparsifier, n, result.sparsifier.graph().edges());
  if (!o.diag_path.empty()) write_json(o.diag_path, stream_diag_json(result.stream));
}

// --- experiment ----------------------------------------------------------------

struct ExperimentOpts {
  ExperimentConfig cfg;
  std::string config_path;
  std::string k_list = "100,500,1500,2500,3500,4500,6000,8000";
  std::string seed_list = "1";
  std::string methods = "stable,sparse,1nn";
  std::string mode = "unweighted";
  std::string weight_form = "half";
  BudgetFlag budget;
  std::string resistance = "sketch";
  std::string out_csv;
  bool quiet = false;
};

// Flat key=value config; `#` comments; keys are the long flag names without
// the dashes. Config values take precedence over flags. Unknown keys are
// rejected.
void apply_experiment_config(const std::string& path, ExperimentOpts& o) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config: " + path);

  auto as_bool = [](const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw config_error("config: expected boolean, got '" + v + "'");
  };
  std::map<std::string, std::function<void(const std::string&)>> setters = {
      {"n", [&](const std::string& v) { o.cfg.n = std::stoll(v); }},
      {"features-csv", [&](const std::string& v) { o.cfg.features_csv = v; }},
      {"data-seed", [&](const std::string& v) { o.cfg.data_seed = std::stoull(v); }},
      {"spread", [&](const std::string& v) { o.cfg.cluster_spread = std::stod(v); }},
      {"per-extreme", [&](const std::string& v) { o.cfg.labels_per_extreme = std::stoll(v); }},
      {"labeled-count", [&](const std::string& v) { o.cfg.labeled_count = std::stoll(v); }},
      {"k", [&](const std::string& v) { o.k_list = v; }},
      {"mode", [&](const std::string& v) { o.mode = v; }},
      {"sigma2", [&](const std::string& v) { o.cfg.sigma2 = std::stod(v); }},
      {"weight-form", [&](const std::string& v) { o.weight_form = v; }},
      {"methods", [&](const std::string& v) { o.methods = v; }},
      {"subsample-s", [&](const std::string& v) { o.cfg.subsample_s = std::stoll(v); }},
      {"eps", [&](const std::string& v) { o.cfg.epsilon = std::stod(v); }},
      {"gamma", [&](const std::string& v) { o.cfg.gamma = std::stod(v); }},
      {"budget", [&](const std::string& v) { o.budget.text = v; }},
      {"budget-constant", [&](const std::string& v) { o.cfg.budget_constant = std::stod(v); }},
      {"block-size", [&](const std::string& v) { o.cfg.block_size = std::stoll(v); }},
      {"resistance", [&](const std::string& v) { o.resistance = v; }},
      {"sketch-dim", [&](const std::string& v) { o.cfg.sketch_dim = std::stoi(v); }},
      {"sketch-constant", [&](const std::string& v) { o.cfg.sketch_constant = std::stod(v); }},
      {"resistance-tol", [&](const std::string& v) { o.cfg.resistance_tolerance = std::stod(v); }},
      {"tol", [&](const std::string& v) { o.cfg.solver_tolerance = std::stod(v); }},
      {"max-iterations", [&](const std::string& v) { o.cfg.max_iterations = std::stoi(v); }},
      {"seeds", [&](const std::string& v) { o.seed_list = v; }},
      {"jobs", [&](const std::string& v) { o.cfg.jobs = std::stoi(v); }},
      {"shuffle-stream", [&](const std::string& v) { o.cfg.shuffle_stream = as_bool(v); }},
      {"shuffle-seed", [&](const std::string& v) { o.cfg.shuffle_seed = std::stoull(v); }},
      {"compute-spectrum", [&](const std::string& v) { o.cfg.compute_spectrum = as_bool(v); }},
      {"bound-c", [&](const std::string& v) { o.cfg.bound_c = std::stod(v); }},
      {"bound-delta", [&](const std::string& v) { o.cfg.bound_delta = std::stod(v); }},
      {"quiet", [&](const std::string& v) { o.quiet = as_bool(v); }},
      {"out", [&](const std::string& v) { o.out_csv = v; }},
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const std::size_t eq = line.find('=', start);
    if (eq == std::string::npos)
      throw config_error(path + ": expected key=value at line " + std::to_string(line_no));
    auto strip = [](std::string s) {
      const std::size_t a = s.find_first_not_of(" \t\r");
      const std::size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = strip(line.substr(start, eq - start));
    const std::string value = strip(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) throw config_error(path + ": unknown config key '" + key + "'");
    try {
      it->second(value);
    } catch (const config_error&) {
      throw;
    } catch (const std::exception&) {
      throw config_error(path + ": bad value for '" + key + "': " + value);
    }
  }
}

void run_experiment_cmd(ExperimentOpts& o) {
  if (!o.config_path.empty()) apply_experiment_config(o.config_path, o);
  if (o.out_csv.empty()) throw config_error("experiment: --out (or config key out) is required");
  o.cfg.k_values = parse_list<int>(o.k_list, "k");
  o.cfg.seeds = parse_list<std::uint64_t>(o.seed_list, "seed");
  o.cfg.weight_mode = parse_weight_mode(o.mode);
  o.cfg.weight_form = parse_weight_form(o.weight_form);
  o.cfg.resistance = parse_resistance(o.resistance);
  {
    SparsifierParams tmp;
    o.budget.apply(tmp);
    o.cfg.budget_mode = tmp.budget_mode;
    o.cfg.budget = tmp.budget;
  }
  o.cfg.run_stable = o.cfg.run_sparse = o.cfg.run_subsampling = o.cfg.run_1nn = false;
  for (const auto& method : parse_list<std::string>(o.methods, "method")) {
    if (method == "stable")
      o.cfg.run_stable = true;
    else if (method == "sparse")
      o.cfg.run_sparse = true;
    else if (method == "subsampling")
      o.cfg.run_subsampling = true;
    else if (method == "1nn")
      o.cfg.run_1nn = true;
    else
      throw config_error("unknown method: " + method);
  }

  auto rows = run_experiment(o.cfg, o.quiet ? nullptr : &std::cerr);
  write_experiment_csv(o.out_csv, rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming spectral sparsification + Stable-HFS semi-supervised solver"};
  app.require_subcommand(1);

  DatagenOpts datagen_opts;
  auto* cmd_datagen = app.add_subcommand("datagen", "Generate the synthetic four-cluster dataset");
  cmd_datagen->add_option("--n", datagen_opts.n, "Number of points")->check(CLI::PositiveNumber);
  cmd_datagen->add_option("--seed", datagen_opts.seed, "RNG seed")->envname("SPARSEHFS_SEED");
  cmd_datagen->add_option("--per-extreme", datagen_opts.per_extreme,
                          "Labels per extreme cluster for --labels-out");
  cmd_datagen->add_option("--spread", datagen_opts.spread, "Cluster standard deviation");
  cmd_datagen->add_option("--out", datagen_opts.out_csv, "Output feature CSV")->required();
  cmd_datagen->add_option("--labels-out", datagen_opts.labels_out,
                          "Also write a labeled subset (uppermost/lowermost clusters)");
  cmd_datagen->callback([&] { run_datagen(datagen_opts); });

  KnnBuildOpts knn_opts;
  auto* cmd_knn = app.add_subcommand("knn-build", "Build a k-nn graph from a feature CSV");
  cmd_knn->add_option("--in", knn_opts.in_csv, "Input feature CSV")->required();
  cmd_knn->add_option("--k", knn_opts.k, "Neighbors per point")->envname("SPARSEHFS_K");
  cmd_knn->add_option("--mode", knn_opts.mode, "unweighted|exponential");
  cmd_knn->add_option("--sigma2", knn_opts.sigma2, "sigma^2 for exponential weights")
      ->envname("SPARSEHFS_SIGMA2");
  cmd_knn->add_option("--weight-form", knn_opts.weight_form,
                      "half: exp(-d/(2s2)) | plain: exp(-d/s2)");
  cmd_knn->add_option("--sym", knn_opts.sym, "union|mutual symmetrization");
  cmd_knn->add_option("--out", knn_opts.out_edges, "Output edge list")->required();
  cmd_knn->callback([&] { run_knn_build(knn_opts); });

  SparsifyOpts sparsify_opts;
  auto* cmd_sparsify = app.add_subcommand("sparsify", "Stream-sparsify an edge list");
  cmd_sparsify->add_option("--in", sparsify_opts.in_edges, "Input edge list")->required();
  cmd_sparsify->add_option("--out", sparsify_opts.out_edges, "Output edge list")->required();
  cmd_sparsify->add_option("--diag", sparsify_opts.diag_path, "Diagnostics JSON path");
  cmd_sparsify->add_option("--seed", sparsify_opts.seed, "RNG seed")->envname("SPARSEHFS_SEED");
  auto* shuffle_opt = cmd_sparsify->add_option(
      "--shuffle", sparsify_opts.shuffle_seed,
      "Shuffle the stream with this seed first (loads the stream into memory)");
  add_sparsifier_options(cmd_sparsify, sparsify_opts.sparsifier);
  add_solver_options(cmd_sparsify, sparsify_opts.solver);
  cmd_sparsify->callback([&] {
    sparsify_opts.shuffle = shuffle_opt->count() > 0;
    run_sparsify(sparsify_opts);
  });

  SolveOpts solve_opts;
  auto* cmd_solve = app.add_subcommand("solve", "Stable-HFS on a full edge list");
  cmd_solve->add_option("--in", solve_opts.in_edges, "Input edge list")->required();
  cmd_solve->add_option("--labels", solve_opts.labels_path, "Labels file")->required();
  cmd_solve->add_option("--gamma", solve_opts.gamma, "Regularization gamma")
      ->envname("SPARSEHFS_GAMMA");
  cmd_solve->add_option("--out", solve_opts.out_solution, "Output solution file")->required();
  add_solver_options(cmd_solve, solve_opts.solver);
  cmd_solve->callback([&] { run_solve(solve_opts); });

  PipelineOpts pipeline_opts;
  auto* cmd_pipeline =
      app.add_subcommand("pipeline", "Stream-sparsify then solve (end to end)");
  cmd_pipeline->add_option("--in", pipeline_opts.in_edges, "Input edge list");
  cmd_pipeline->add_option("--in-csv", pipeline_opts.in_csv, "Input feature CSV (builds knn)");
  cmd_pipeline->add_option("--k", pipeline_opts.knn.k, "Neighbors (csv mode)")
      ->envname("SPARSEHFS_K");
  cmd_pipeline->add_option("--mode", pipeline_opts.knn.mode, "unweighted|exponential (csv mode)");
  cmd_pipeline->add_option("--sigma2", pipeline_opts.knn.sigma2, "sigma^2 (csv mode)")
      ->envname("SPARSEHFS_SIGMA2");
  cmd_pipeline->add_option("--weight-form", pipeline_opts.knn.weight_form, "half|plain (csv mode)");
  cmd_pipeline->add_option("--sym", pipeline_opts.knn.sym, "union|mutual (csv mode)");
  cmd_pipeline->add_option("--labels", pipeline_opts.labels_path, "Labels file")->required();
  cmd_pipeline->add_option("--gamma", pipeline_opts.gamma, "Regularization gamma")
      ->envname("SPARSEHFS_GAMMA");
  cmd_pipeline->add_option("--seed", pipeline_opts.seed, "RNG seed")->envname("SPARSEHFS_SEED");
  cmd_pipeline->add_option("--out", pipeline_opts.out_solution, "Output solution file")->required();
  cmd_pipeline->add_option("--out-sparsifier", pipeline_opts.out_sparsifier,
                           "Also write the sparsifier edge list");
  cmd_pipeline->add_option("--diag", pipeline_opts.diag_path, "Diagnostics JSON path");
  add_sparsifier_options(cmd_pipeline, pipeline_opts.sparsifier);
  add_solver_options(cmd_pipeline, pipeline_opts.solver);
  cmd_pipeline->callback([&] { run_pipeline(pipeline_opts); });

  ExperimentOpts exp_opts;
  auto* cmd_exp = app.add_subcommand("experiment", "Batch sweep: methods x k x seeds");
  cmd_exp->add_option("--config", exp_opts.config_path,
                      "Flat key=value config file (values take precedence over flags)");
  cmd_exp->add_option("--n", exp_opts.cfg.n, "Synthetic dataset size");
  cmd_exp->add_option("--features-csv", exp_opts.cfg.features_csv, "Feature CSV instead of synthetic");
  cmd_exp->add_option("--data-seed", exp_opts.cfg.data_seed, "Dataset generation seed");
  cmd_exp->add_option("--spread", exp_opts.cfg.cluster_spread, "Cluster standard deviation");
  cmd_exp->add_option("--per-extreme", exp_opts.cfg.labels_per_extreme, "Labels per extreme cluster");
  cmd_exp->add_option("--labeled-count", exp_opts.cfg.labeled_count, "Labeled nodes (csv mode)");
  cmd_exp->add_option("--k", exp_opts.k_list, "Comma-separated k sweep")->envname("SPARSEHFS_K");
  cmd_exp->add_option("--mode", exp_opts.mode, "unweighted|exponential");
  cmd_exp->add_option("--sigma2", exp_opts.cfg.sigma2, "sigma^2 for exponential weights")
      ->envname("SPARSEHFS_SIGMA2");
  cmd_exp->add_option("--weight-form", exp_opts.weight_form, "half|plain");
  cmd_exp->add_option("--methods", exp_opts.methods, "Comma list of stable,sparse,subsampling,1nn");
  cmd_exp->add_option("--subsample-s", exp_opts.cfg.subsample_s, "SubSampling sample size (0 = n/8)");
  cmd_exp->add_option("--eps", exp_opts.cfg.epsilon, "Sparsifier epsilon")->envname("SPARSEHFS_EPS");
  cmd_exp->add_option("--gamma", exp_opts.cfg.gamma, "Regularization gamma")
      ->envname("SPARSEHFS_GAMMA");
  cmd_exp->add_option("--budget", exp_opts.budget.text, "practical|theory|<int>")
      ->envname("SPARSEHFS_BUDGET");
  cmd_exp->add_option("--budget-constant", exp_opts.cfg.budget_constant, "c_N");
  cmd_exp->add_option("--block-size", exp_opts.cfg.block_size, "Stream block size (0 = budget)");
  cmd_exp->add_option("--resistance", exp_opts.resistance, "sketch|exact|cap");
  cmd_exp->add_option("--sketch-dim", exp_opts.cfg.sketch_dim, "Sketch rows (0 = auto)");
  cmd_exp->add_option("--sketch-constant", exp_opts.cfg.sketch_constant, "Sketch constant C");
  cmd_exp->add_option("--resistance-tol", exp_opts.cfg.resistance_tolerance,
                      "Looser solver tolerance for resistance estimation (0 = --tol)");
  cmd_exp->add_option("--tol", exp_opts.cfg.solver_tolerance, "Solver tolerance");
  cmd_exp->add_option("--max-iterations", exp_opts.cfg.max_iterations, "CG iteration cap");
  cmd_exp->add_option("--seeds", exp_opts.seed_list, "Comma-separated seeds")
      ->envname("SPARSEHFS_SEED");
  cmd_exp->add_option("--jobs", exp_opts.cfg.jobs, "Parallel seeds per k")->envname("SPARSEHFS_JOBS");
  cmd_exp->add_flag("--shuffle-stream", exp_opts.cfg.shuffle_stream, "Shuffle edge order per seed");
  cmd_exp->add_option("--shuffle-seed", exp_opts.cfg.shuffle_seed, "Shuffle seed");
  cmd_exp->add_flag("--compute-spectrum", exp_opts.cfg.compute_spectrum,
                    "Add lambda2/lambda_n/bound columns");
  cmd_exp->add_option("--bound-c", exp_opts.cfg.bound_c, "Function-error bound c");
  cmd_exp->add_option("--bound-delta", exp_opts.cfg.bound_delta, "Failure probability delta");
  cmd_exp->add_flag("--quiet", exp_opts.quiet, "Suppress progress output");
  cmd_exp->add_option("--out", exp_opts.out_csv, "Results CSV path (or config key out)");
  cmd_exp->callback([&] { run_experiment_cmd(exp_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const config_error& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kExitParse;
  } catch (const io_error& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: compute: " << e.what() << "\n";
    return kExitCompute;
  }
  return 0;
}
