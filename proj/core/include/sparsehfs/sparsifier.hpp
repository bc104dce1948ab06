#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "sparsehfs/edge_list_io.hpp"
#include "sparsehfs/graph.hpp"
#include "sparsehfs/solver.hpp"

namespace sparsehfs {

enum class BudgetMode {
  /// c_N * n * ln^2(n) / eps^2 — what the experiments run with.
  practical,
  /// alpha^2 * n * ln^2(n) / eps^2 — the guarantee-bearing size, usually
  /// larger than m at desk scale.
  theory,
};

enum class ResistanceMode {
  /// Sketched estimates (default production path).
  sketched,
  /// Per-edge exact resistances; test/diagnostic hook, O(m) solves per step.
  exact,
  /// Forces every sampling probability to 1: edges pass through at their
  /// original weights. Diagnostic mode; leverage scores never reach the cap
  /// organically, so this is the only way to get a passthrough sparsifier.
  capped,
};

struct SparsifierParams {
  double epsilon = 0.5;
  NodeId n = 0;
  /// Explicit sample budget N; 0 derives it from budget_mode.
  std::int64_t budget = 0;
  BudgetMode budget_mode = BudgetMode::practical;
  double budget_constant = 1.0;
  /// Stream block size; 0 means one block per budget N.
  std::int64_t block_size = 0;
  ResistanceMode resistance = ResistanceMode::sketched;
  int sketch_dim = 0;
  double sketch_constant = 24.0;
  /// Solver tolerance for the resistance-estimation solves only (0 = use the
  /// caller's SolverConfig). Estimates only need alpha-factor accuracy, so
  /// this can be much looser than the HFS solve tolerance.
  double resistance_tolerance = 0.0;
  /// Floor for sampling probabilities, avoids division blow-up in w_e.
  double p_min = 1e-12;

  double alpha() const { return 1.0 / (1.0 - epsilon); }
  /// Budget after applying the mode formula; never below n-1.
  std::int64_t effective_budget() const;
  std::int64_t effective_block_size() const;
  void validate() const;
};

/// Per-edge bookkeeping carried between resparsification steps. The edge's
/// weight in the sparsifier is copies * original_weight / (N * prob); capped
/// edges hold prob == 1 and copies == N, which reduces to original_weight.
struct LedgerEntry {
  double original_weight = 0.0;
  double prob = 1.0;
  std::int64_t copies = 0;
};

class SparsifierState {
 public:
  explicit SparsifierState(NodeId n)
      : n_(n), graph_(n, {}) {}

  NodeId num_nodes() const { return n_; }
  std::int64_t edges_seen() const { return edges_seen_; }
  std::size_t distinct_edges() const { return ledger_.size(); }
  /// Current sparsifier H.
  const WeightedGraph& graph() const { return graph_; }
  const std::unordered_map<std::uint64_t, LedgerEntry>& ledger() const { return ledger_; }
  /// Retained probability of a canonical edge, or 0 if absent.
  double prob_of(NodeId u, NodeId v) const {
    auto it = ledger_.find(edge_key(u, v));
    return it == ledger_.end() ? 0.0 : it->second.prob;
  }

 private:
  friend SparsifierState sparsify_step(const SparsifierState&, std::span<const WeightedEdge>,
                                       const SparsifierParams&, const SolverConfig&, std::uint64_t,
                                       std::uint64_t, struct StepDiagnostics*);
  NodeId n_;
  std::unordered_map<std::uint64_t, LedgerEntry> ledger_;
  WeightedGraph graph_;
  std::int64_t edges_seen_ = 0;
};

struct StepDiagnostics {
  /// Edge-bearing connected components in H + delta. More than one means the
  /// step ran component-wise with (|C|-1) in the probability denominator.
  NodeId edge_components = 0;
  bool disconnected_union = false;
  std::size_t union_edges = 0;
};

/// One Kelner-Levin resparsification step on H + delta:
///  1. estimate resistances R'_e for all edges of the union,
///  2. p'_e = min(1, a_e R'_e / (alpha (n-1))), w_e = a_e / (N p'_e),
///  3. existing samples survive independently with min(p_e, p'_e)/p_e and are
///     reweighted,
///  4. each new edge draws Binomial(N, p'_e) samples of weight w_e.
/// a_e is always the original stream weight, never the current sparsifier
/// weight. Randomness is keyed by (seed, block_index, edge), so the result
/// does not depend on edge iteration order.
SparsifierState sparsify_step(const SparsifierState& state, std::span<const WeightedEdge> delta,
                              const SparsifierParams& params, const SolverConfig& cfg,
                              std::uint64_t seed, std::uint64_t block_index = 0,
                              StepDiagnostics* diag = nullptr);

struct StreamDiagnostics {
  std::int64_t edges_seen = 0;
  int blocks = 0;
  std::size_t distinct_edges = 0;
  /// Max over blocks of (ledger size + raw block size): the most distinct
  /// edges ever held at once.
  std::size_t peak_memory_edges = 0;
  std::vector<double> per_block_ms;
  int disconnected_blocks = 0;
};

/// Consumes the stream in consecutive blocks, resparsifying after each one.
/// Only the current block and the sparsifier are ever held in memory.
SparsifierState stream_sparsify(EdgeSource& stream, const SparsifierParams& params,
                                const SolverConfig& cfg, std::uint64_t seed,
                                StreamDiagnostics* diag = nullptr);

}  // namespace sparsehfs
