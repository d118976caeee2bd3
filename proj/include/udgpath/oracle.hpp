#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udgpath/geometry.hpp"
#include "udgpath/graph.hpp"
#include "udgpath/marking.hpp"

namespace udgpath {

struct EnumerationLimits {
  int max_n = 14;
  std::int64_t max_paths = 50'000'000;
  /// Throws InputError unless 1 <= max_n <= 16 and max_paths >= 1.
  void validate() const;
};

struct OracleResult {
  /// Vertex count (unweighted) or total weight; empty when nothing exists.
  std::optional<std::int64_t> value;
  std::vector<Vertex> witness;  // canonical
};

/// DFS over (endpoint, visited set) with memoization. Throws RefusalError
/// when n exceeds the cap.
OracleResult longest_path_bruteforce(const Graph& g, EnumerationLimits limits = {});
OracleResult longest_cycle_bruteforce(const Graph& g, EnumerationLimits limits = {});

/// Held-Karp style subset DP, written independently of the DFS oracle.
OracleResult longest_path_held_karp(const Graph& g, EnumerationLimits limits = {});
OracleResult longest_cycle_held_karp(const Graph& g, EnumerationLimits limits = {});

/// Weighted variants by plain enumeration of all simple paths (cycles).
OracleResult max_weight_path_bruteforce(const Graph& g, std::span<const std::int64_t> weights,
                                        EnumerationLimits limits = {});
OracleResult max_weight_cycle_bruteforce(const Graph& g, std::span<const std::int64_t> weights,
                                         EnumerationLimits limits = {});

struct GoodCellCheck {
  bool holds = false;
  /// Number of size >= k solutions inspected before deciding.
  std::int64_t inspected = 0;
  /// On success, a solution whose cells are all good.
  std::vector<Vertex> witness;
  /// On failure, a description of the instance and budgets.
  std::string counterexample;
};

/// Searches every path (cycle) on at least k vertices for one that leaves
/// every cell good. Precondition: such a solution exists at all, otherwise
/// ContractViolation.
GoodCellCheck check_good_cell_existence(const Graph& g, const CliqueGrid& rep, const MarkingResult& marks, int k,
                                        Variant variant, EnumerationLimits limits = {});

}  // namespace udgpath
