#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "udgpath/decomposition.hpp"
#include "udgpath/graph.hpp"
#include "udgpath/reduction.hpp"

namespace udgpath {

/// `matching` keeps every (degree profile, endpoint pairing) state.
/// `rank_based` additionally prunes each table to a max-weight basis of the
/// cut-consistency matrix over GF(2), which bounds the pairings kept per
/// degree profile by 2^(#endpoints - 1).
enum class DpEngine { matching, rank_based };

std::string_view to_string(DpEngine e);
DpEngine parse_engine(std::string_view s);

struct DpResult {
  /// Best total vertex weight; empty when no solution exists.
  std::optional<std::int64_t> weight;
  /// Canonical optimal path or cycle (vertex ids of the input graph).
  std::vector<Vertex> witness;
  /// Table entries created over all nodes.
  std::int64_t states = 0;
};

struct DpOptions {
  DpEngine engine = DpEngine::matching;
  /// Positive values cap the table entries held at once; exceeding the cap
  /// throws RefusalError. Zero means no cap.
  std::int64_t state_budget = 0;
  /// Decision mode. Partial solutions that cannot reach the target are
  /// dropped and the run stops at the first solution meeting it. The
  /// returned weight is then some value >= target, or empty when no such
  /// solution exists; it is not necessarily the maximum.
  std::optional<std::int64_t> target;
};

/// Maximum-weight simple path (a single vertex counts). Weights must be >= 1.
/// The witness is validated against `g` before returning. A positive
/// `state_budget` caps the table entries held at once; going past it throws
/// RefusalError instead of exhausting memory.
DpResult max_weight_path(const Graph& g, std::span<const std::int64_t> weights, const NiceTreeDecomposition& ntd,
                         DpEngine engine = DpEngine::matching, std::int64_t state_budget = 0);

/// Maximum-weight simple cycle on at least three vertices.
DpResult max_weight_cycle(const Graph& g, std::span<const std::int64_t> weights, const NiceTreeDecomposition& ntd,
                          DpEngine engine = DpEngine::matching, std::int64_t state_budget = 0);

DpResult max_weight_path(const Graph& g, std::span<const std::int64_t> weights, const NiceTreeDecomposition& ntd,
                         const DpOptions& opt);
DpResult max_weight_cycle(const Graph& g, std::span<const std::int64_t> weights, const NiceTreeDecomposition& ntd,
                          const DpOptions& opt);

/// Best of max_weight_cycle and the aggregate closures of G* (see
/// is_aggregate_closure). This is the cycle quantity that matches cycles of
/// the original graph.
DpResult max_weight_reduced_cycle(const WeightedGraph& reduced, const NiceTreeDecomposition& ntd,
                                  DpEngine engine = DpEngine::matching, std::int64_t state_budget = 0);

/// Aggregate closures alone, as a fallback witness source.
DpResult best_aggregate_closure(const WeightedGraph& reduced);

}  // namespace udgpath
