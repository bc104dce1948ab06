#include "sparsehfs/sparsifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "sparsehfs/errors.hpp"
#include "sparsehfs/resistance.hpp"
#include "sparsehfs/rng.hpp"

namespace sparsehfs {

namespace {

constexpr std::uint64_t kBinomialSalt = 0xb1a0;
constexpr std::uint64_t kSketchSalt = 0x6e57;

std::int64_t sample_binomial(std::int64_t trials, double p, std::mt19937_64& rng) {
  if (trials <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::binomial_distribution<std::int64_t> dist(trials, p);
  return dist(rng);
}

}  // namespace

std::int64_t SparsifierParams::effective_budget() const {
  std::int64_t b = budget;
  if (b == 0) {
    const double ln_n = std::log(static_cast<double>(std::max<NodeId>(n, 2)));
    double raw = 0.0;
    if (budget_mode == BudgetMode::practical) {
      raw = budget_constant * static_cast<double>(n) * ln_n * ln_n / (epsilon * epsilon);
    } else {
      const double a = alpha();
      raw = a * a * static_cast<double>(n) * ln_n * ln_n / (epsilon * epsilon);
    }
    b = static_cast<std::int64_t>(std::ceil(raw));
  }
  return std::max<std::int64_t>(b, std::max<NodeId>(n, 2) - 1);
}

std::int64_t SparsifierParams::effective_block_size() const {
  return block_size > 0 ? block_size : effective_budget();
}

void SparsifierParams::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw config_error("sparsifier: epsilon must be in (0,1)");
  if (n == 0) throw config_error("sparsifier: n must be set");
  if (budget < 0 || block_size < 0) throw config_error("sparsifier: negative budget/block size");
  if (budget > 0 && budget < static_cast<std::int64_t>(n) - 1)
    throw config_error("sparsifier: budget must be at least n-1");
  if (!(p_min > 0.0 && p_min <= 1.0)) throw config_error("sparsifier: p_min out of range");
}

SparsifierState sparsify_step(const SparsifierState& state, std::span<const WeightedEdge> delta,
                              const SparsifierParams& params, const SolverConfig& cfg,
                              std::uint64_t seed, std::uint64_t block_index,
                              StepDiagnostics* diag) {
  params.validate();
  const NodeId n = state.num_nodes();
  if (params.n != n) throw config_error("sparsify_step: params.n does not match state");
  const std::int64_t budget = params.effective_budget();
  const double alpha = params.alpha();

  SparsifierState next = state;
  next.edges_seen_ += static_cast<std::int64_t>(delta.size());

  // Canonicalize and merge duplicates within the block.
  std::vector<WeightedEdge> block(delta.begin(), delta.end());
  for (auto& e : block) {
    if (e.u >= n || e.v >= n) throw graph_error("sparsify_step: edge endpoint out of range");
    if (e.u == e.v) throw graph_error("sparsify_step: self-loop in block");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw graph_error("sparsify_step: nonpositive edge weight in block");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(block.begin(), block.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return edge_key(a.u, a.v) < edge_key(b.u, b.v);
  });
  std::vector<WeightedEdge> merged;
  merged.reserve(block.size());
  for (const auto& e : block) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v)
      merged.back().weight += e.weight;
    else
      merged.push_back(e);
  }

  // Union graph H + delta with the sparsifier's current weights; a re-arrived
  // edge contributes its stream weight on top (weights sum per the graph
  // merge rule).
  std::vector<WeightedEdge> union_edges;
  union_edges.reserve(next.ledger_.size() + merged.size());
  for (const auto& e : next.graph_.edges()) union_edges.push_back(e);
  for (const auto& e : merged) union_edges.push_back(e);
  WeightedGraph union_graph(n, std::move(union_edges));

  // After the union is built, fold re-arrivals into the ledger: the combined
  // stream weight drives this step's probabilities, the existing samples are
  // resampled like any other H edge.
  std::vector<WeightedEdge> fresh;
  fresh.reserve(merged.size());
  for (const auto& e : merged) {
    auto it = next.ledger_.find(edge_key(e.u, e.v));
    if (it != next.ledger_.end())
      it->second.original_weight += e.weight;
    else
      fresh.push_back(e);
  }

  // Resistances per edge-bearing connected component of the union; each
  // component uses (|C|-1) in the probability denominator.
  SolverConfig resistance_cfg = cfg;
  if (params.resistance_tolerance > 0.0)
    resistance_cfg.rel_tolerance = params.resistance_tolerance;
  const auto& u_edges = union_graph.edges();
  std::vector<double> resistance(u_edges.size(), 0.0);
  std::vector<double> denom(u_edges.size(), 1.0);
  NodeId edge_components = 0;

  if (!u_edges.empty() && params.resistance != ResistanceMode::capped) {
    auto [comp, comp_count] = connected_components(union_graph);
    std::vector<NodeId> comp_nodes(comp_count, 0);
    for (NodeId i = 0; i < n; ++i) ++comp_nodes[comp[i]];

    std::vector<std::vector<std::size_t>> comp_edge_ids(comp_count);
    for (std::size_t e = 0; e < u_edges.size(); ++e)
      comp_edge_ids[comp[u_edges[e].u]].push_back(e);

    for (NodeId c = 0; c < comp_count; ++c) {
      const auto& ids = comp_edge_ids[c];
      if (ids.empty()) continue;
      ++edge_components;
      // Remap component nodes to a compact range.
      std::vector<NodeId> local(n, 0);
      NodeId local_n = 0;
      std::vector<WeightedEdge> local_edges;
      local_edges.reserve(ids.size());
      {
        std::vector<bool> seen(n, false);
        for (std::size_t e : ids) {
          for (NodeId x : {u_edges[e].u, u_edges[e].v}) {
            if (!seen[x]) {
              seen[x] = true;
              local[x] = local_n++;
            }
          }
        }
      }
      for (std::size_t e : ids)
        local_edges.push_back({local[u_edges[e].u], local[u_edges[e].v], u_edges[e].weight});
      WeightedGraph sub(local_n, std::move(local_edges));

      const double comp_denom = alpha * static_cast<double>(local_n - 1);
      if (params.resistance == ResistanceMode::exact) {
        for (std::size_t e : ids) {
          resistance[e] =
              effective_resistance_exact(sub, local[u_edges[e].u], local[u_edges[e].v], resistance_cfg).value;
          denom[e] = comp_denom;
        }
      } else {
        auto est = estimate_all_resistances(sub, alpha, params.sketch_dim, resistance_cfg,
                                            stream_key(seed, kSketchSalt, block_index, c),
                                            SketchKind::rademacher, params.sketch_constant);
        // estimates align with sub.edges(); recover the union ids by lookup.
        std::vector<std::size_t> sorted_ids(ids);
        std::sort(sorted_ids.begin(), sorted_ids.end(), [&](std::size_t a, std::size_t b) {
          return edge_key(local[u_edges[a].u], local[u_edges[a].v]) <
                 edge_key(local[u_edges[b].u], local[u_edges[b].v]);
        });
        for (std::size_t i = 0; i < sorted_ids.size(); ++i) {
          resistance[sorted_ids[i]] = est[i].value;
          denom[sorted_ids[i]] = comp_denom;
        }
      }
    }
  }

  if (diag) {
    diag->edge_components = std::max<NodeId>(edge_components, u_edges.empty() ? 0 : 1);
    diag->disconnected_union = !u_edges.empty() && !union_graph.is_connected();
    diag->union_edges = u_edges.size();
  }

  // Sampling probabilities and the resample/sample passes.
  for (std::size_t e = 0; e < u_edges.size(); ++e) {
    const NodeId u = u_edges[e].u, v = u_edges[e].v;
    const std::uint64_t key = edge_key(u, v);
    auto ledger_it = next.ledger_.find(key);
    const bool in_ledger = ledger_it != next.ledger_.end();
    const double a_e = in_ledger ? ledger_it->second.original_weight : [&] {
      auto it = std::lower_bound(fresh.begin(), fresh.end(), key,
                                 [](const WeightedEdge& x, std::uint64_t k) {
                                   return edge_key(x.u, x.v) < k;
                                 });
      return it->weight;
    }();

    double p_new = 1.0;
    if (params.resistance != ResistanceMode::capped) {
      p_new = a_e * resistance[e] / denom[e];
      p_new = std::clamp(p_new, params.p_min, 1.0);
    }

    auto rng = make_rng(seed, kBinomialSalt, block_index, static_cast<std::uint64_t>(key));
    if (in_ledger) {
      LedgerEntry& entry = ledger_it->second;
      if (p_new < entry.prob) {
        entry.copies = sample_binomial(entry.copies, p_new / entry.prob, rng);
        entry.prob = p_new;
      }
      if (entry.copies == 0) next.ledger_.erase(ledger_it);
    } else {
      const std::int64_t copies = sample_binomial(budget, p_new, rng);
      if (copies > 0) next.ledger_[key] = {a_e, p_new, copies};
    }
  }

  // Materialize H' from the ledger.
  std::vector<WeightedEdge> h_edges;
  h_edges.reserve(next.ledger_.size());
  for (const auto& [key, entry] : next.ledger_) {
    const NodeId u = static_cast<NodeId>(key >> 32);
    const NodeId v = static_cast<NodeId>(key & 0xffffffffu);
    const double w = entry.prob >= 1.0
                         ? entry.original_weight
                         : static_cast<double>(entry.copies) * entry.original_weight /
                               (static_cast<double>(budget) * entry.prob);
    h_edges.push_back({u, v, w});
  }
  next.graph_ = WeightedGraph(n, std::move(h_edges));
  return next;
}

SparsifierState stream_sparsify(EdgeSource& stream, const SparsifierParams& params,
                                const SolverConfig& cfg, std::uint64_t seed,
                                StreamDiagnostics* diag) {
  params.validate();
  const NodeId n = stream.num_nodes();
  if (params.n != n) throw config_error("stream_sparsify: params.n does not match stream");
  const std::int64_t block_size = params.effective_block_size();

  SparsifierState state(n);
  StreamDiagnostics local;
  std::vector<WeightedEdge> block;
  block.reserve(static_cast<std::size_t>(block_size));
  std::uint64_t block_index = 0;
  bool any = false;
  for (;;) {
    block.clear();
    while (static_cast<std::int64_t>(block.size()) < block_size) {
      auto e = stream.next();
      if (!e) break;
      block.push_back(*e);
    }
    if (block.empty()) break;
    any = true;
    const std::size_t held = state.distinct_edges() + block.size();
    local.peak_memory_edges = std::max(local.peak_memory_edges, held);

    const auto t0 = std::chrono::steady_clock::now();
    StepDiagnostics step_diag;
    state = sparsify_step(state, block, params, cfg, seed, block_index, &step_diag);
    const auto t1 = std::chrono::steady_clock::now();
    local.per_block_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (step_diag.disconnected_union) ++local.disconnected_blocks;
    ++block_index;
  }
  if (!any) throw graph_error("stream_sparsify: empty edge stream");

  local.edges_seen = state.edges_seen();
  local.blocks = static_cast<int>(block_index);
  local.distinct_edges = state.distinct_edges();
  if (diag) *diag = std::move(local);
  return state;
}

}  // namespace sparsehfs
