#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udgpath/geometry.hpp"
#include "udgpath/graph.hpp"
#include "udgpath/marking.hpp"

namespace udgpath {

enum class Origin { marked, aggregate };

/// The reduced graph G*. Vertices are numbered 0..N-1 in increasing order of
/// their original id in G; `original` maps back. An aggregate vertex stands
/// for all unmarked vertices of its cell and carries their count as weight.
struct WeightedGraph {
  Graph graph;
  std::vector<std::int64_t> weight;
  std::vector<Vertex> original;
  std::vector<Origin> origin;
  std::vector<Cell> cell;
  /// For aggregates: f^{-1}(i,j) \ Mark*(i,j) ascending. Empty for marked.
  std::vector<std::vector<Vertex>> back_map;
  int max_degree = 0;

  int num_vertices() const { return graph.num_vertices(); }
  bool is_aggregate(Vertex v) const { return origin[static_cast<std::size_t>(v)] == Origin::aggregate; }
  std::int64_t weight_of(std::span<const Vertex> seq) const;
  std::optional<Vertex> local_id(Vertex original_id) const;
};

WeightedGraph build_reduced(const Graph& graph, const CliqueGrid& rep, const MarkingResult& marks);

/// Closed sequences in G* that are not simple cycles but still lift to a
/// cycle of G: a lone aggregate of weight >= 3, or an aggregate of weight
/// >= 2 followed by one of its (marked, same-cell) neighbors.
bool is_aggregate_closure(const WeightedGraph& reduced, std::span<const Vertex> seq);

/// Path (cycle) of G* or, for cycles, an aggregate closure.
bool is_reduced_solution(const WeightedGraph& reduced, std::span<const Vertex> seq, Variant variant);

/// Expands every aggregate in place into its unmarked vertices (ascending).
/// Returns original vertex ids. Throws ContractViolation on invalid input.
std::vector<Vertex> lift_solution(const WeightedGraph& reduced, std::span<const Vertex> seq, Variant variant);

/// Collapses each maximal run of unmarked vertices into its cell's
/// aggregate. Requires every cell to be good for `seq`; otherwise throws
/// ContractViolation naming the offending cell.
std::vector<Vertex> project_solution(const Graph& graph, const CliqueGrid& rep, const MarkingResult& marks,
                                     const WeightedGraph& reduced, std::span<const Vertex> seq, Variant variant);

}  // namespace udgpath
