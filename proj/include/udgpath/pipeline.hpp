#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udgpath/dp.hpp"
#include "udgpath/geometry.hpp"
#include "udgpath/graph.hpp"
#include "udgpath/marking.hpp"
#include "udgpath/reduction.hpp"

namespace udgpath {

struct SolveRequest {
  DiskSet disks;
  int k = 1;
  Variant variant = Variant::path;
  MarkingBudgets budgets;
  bool want_witness = false;
  /// Replaces the theoretical shortcut threshold. Runs that use it are
  /// reported as not certified.
  std::optional<std::int64_t> threshold_override;
  DpEngine engine = DpEngine::matching;
  /// Cap on DP table entries held at once (0 = unlimited). Exceeding it
  /// raises RefusalError.
  std::int64_t dp_state_budget = 8'000'000;
};

enum class Answer { yes, no };
enum class Branch { shortcut, dp };
std::string_view to_string(Answer a);
std::string_view to_string(Branch b);

struct SolveStats {
  /// Wall time per stage in milliseconds, in execution order.
  std::vector<std::pair<std::string, double>> timings;
  /// |Mark*(i,j)| -> number of occupied cells with that many marks.
  std::map<std::int64_t, std::int64_t> mark_histogram;
  std::int64_t marked_vertices = 0;
  std::int64_t occupied_cells = 0;
  int reduced_n = 0;
  std::int64_t reduced_m = 0;
  int delta = 0;
  /// Widest decomposition the DP ran on; -1 when the DP did not run.
  int width = -1;
  std::int64_t dp_states = 0;
  int components_solved = 0;
  /// Treewidth lower bound of G*; -1 when not computed.
  int lower_bound = -1;
  std::int64_t threshold = 0;
  bool certified = true;
  /// Best weight found on G*; the DP may stop early once it reaches k.
  std::optional<std::int64_t> best_weight;
};

struct SolveReport {
  Answer answer = Answer::no;
  Branch branch = Branch::dp;
  int k = 1;
  Variant variant = Variant::path;
  int n = 0;
  std::int64_t m = 0;
  /// Vertices of G; present only when a witness was requested and found.
  std::optional<std::vector<Vertex>> witness;
  SolveStats stats;
};

/// The geometric front half of the algorithm, shared by solve, render and
/// the inspection commands.
struct Prepared {
  UnitDiskGraph graph;
  CliqueGrid rep;
  MarkingResult marks;
  WeightedGraph reduced;
};

Prepared prepare(const DiskSet& disks, MarkingBudgets budgets);

/// Number of vertices a cycle must have to satisfy query k.
inline int effective_target(int k, Variant variant) { return variant == Variant::cycle && k < 3 ? 3 : k; }

/// Best weight of a path (cycle, counting aggregate closures) of G*, solved
/// per connected component. With `stop_at` the DP runs in decision mode: the
/// result meets `stop_at` exactly when such a solution exists, but its weight
/// is not necessarily the optimum, and below `stop_at` it may be empty.
struct ReducedOptimum {
  DpResult best;  // witness uses G* ids
  int width = -1;
  int components_solved = 0;
};
ReducedOptimum solve_reduced(const WeightedGraph& reduced, Variant variant, DpEngine engine,
                             std::optional<std::int64_t> stop_at = std::nullopt, std::int64_t state_budget = 0);

/// Throws InputError for k < 1 or bad budgets; ContractViolation from an
/// internal stage is rethrown prefixed with the stage name.
SolveReport solve(const SolveRequest& req);

}  // namespace udgpath
