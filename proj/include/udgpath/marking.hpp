#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "udgpath/geometry.hpp"
#include "udgpath/graph.hpp"

namespace udgpath {

/// q1 caps each cross-cell matching; q2 caps the neighbors a matched vertex
/// marks in each nearby cell.
struct MarkingBudgets {
  int q1 = 241;
  int q2 = 121;

  /// q1 >= 1 and q2 >= 0, otherwise throws InputError.
  void validate() const;

  /// Upper bound on |Mark*(i,j)|: 24*q1 + 24*(24*q1)*q2.
  std::int64_t mark_bound() const {
    const std::int64_t a = q1;
    const std::int64_t b = q2;
    return 24 * a + 24 * (24 * a) * b;
  }

  bool operator==(const MarkingBudgets&) const = default;
};

/// Unordered pair of distinct cells, stored with first < second.
struct CellPair {
  Cell first;
  Cell second;
  auto operator<=>(const CellPair&) const = default;
};

inline CellPair make_cell_pair(Cell a, Cell b) { return a < b ? CellPair{a, b} : CellPair{b, a}; }

struct MarkingResult {
  MarkingBudgets budgets;
  /// Phase-I matchings, only for pairs with at least one edge between them.
  std::map<CellPair, std::vector<Edge>> mark1_pairs;
  /// Mark*(i,j) for every occupied cell (possibly empty), sorted ascending.
  std::map<Cell, std::vector<Vertex>> mark_star;
  /// Per vertex: endpoint of some Phase-I matching edge.
  std::vector<char> phase1;
  /// Per vertex: member of Mark*.
  std::vector<char> marked;

  bool is_marked(Vertex v) const { return marked[static_cast<std::size_t>(v)] != 0; }
  const std::vector<Vertex>& marked_in(Cell c) const;
  /// f^{-1}(c) \ Mark*(c), ascending.
  std::vector<Vertex> unmarked_in(const CliqueGrid& rep, Cell c) const;
};

/// Two-phase marking with deterministic choices: greedy maximal matchings
/// over edges in (min id, max id) order, then the q2 smallest-id neighbors.
MarkingResult run_marking(const Graph& graph, const CliqueGrid& rep, MarkingBudgets budgets);

enum class EdgeClass { intra_cell, good, bad };

EdgeClass classify_edge(const Graph& graph, Edge e, const CliqueGrid& rep, const MarkingResult& marks);

enum class CellClass { good, nice_not_good, bad };

/// How a path or cycle meets one cell's unmarked vertices. Throws
/// ContractViolation when `seq` is not a path (cycle) of `graph`.
CellClass classify_cell(const Graph& graph, std::span<const Vertex> seq, Variant variant, Cell cell,
                        const CliqueGrid& rep, const MarkingResult& marks);

/// True iff every cell is good for `seq`. Cells the sequence never touches
/// are trivially good, so only visited cells are checked.
bool all_cells_good(const Graph& graph, std::span<const Vertex> seq, Variant variant, const CliqueGrid& rep,
                    const MarkingResult& marks);

}  // namespace udgpath
