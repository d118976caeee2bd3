#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace udgpath {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
/// sorted and duplicate free, so neighbor iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  /// Self-loops are rejected; repeated edges are merged.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Takes adjacency lists as-is after checking they are sorted, symmetric
  /// and loop free.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::int64_t num_edges() const { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::int64_t num_edges_ = 0;
};

enum class Variant { path, cycle };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

/// Nonempty, pairwise distinct, consecutive vertices adjacent.
bool is_simple_path(const Graph& g, std::span<const Vertex> seq);

/// At least three distinct vertices, consecutive vertices adjacent and the
/// last vertex adjacent to the first.
bool is_simple_cycle(const Graph& g, std::span<const Vertex> seq);

inline bool is_solution(const Graph& g, std::span<const Vertex> seq, Variant variant) {
  return variant == Variant::path ? is_simple_path(g, seq) : is_simple_cycle(g, seq);
}

/// Reverses a path if needed so the smaller endpoint comes first.
std::vector<Vertex> canonical_path(std::vector<Vertex> seq);

/// Rotates a cycle to start at its minimum vertex, oriented towards the
/// smaller of that vertex's two cycle neighbors.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> seq);

inline std::vector<Vertex> canonical(std::vector<Vertex> seq, Variant variant) {
  return variant == Variant::path ? canonical_path(std::move(seq)) : canonical_cycle(std::move(seq));
}

/// Components listed by smallest member; members sorted ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Subgraph induced by `vertices` (sorted ascending); vertex i of the result
/// is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace udgpath
