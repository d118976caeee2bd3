#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udgpath/graph.hpp"

namespace udgpath {

/// Bags over graph vertices connected by tree edges.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each sorted ascending
  std::vector<std::pair<int, int>> tree_edges;

  int num_bags() const { return static_cast<int>(bags.size()); }
  /// Max bag size minus one; -1 for an empty decomposition.
  int width() const;
};

/// Checks: the bags form a tree, every edge is covered, and the bags holding
/// each vertex induce a nonempty connected subtree. Returns the first
/// violated condition.
std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Elimination orderings; ties broken by smallest vertex id.
std::vector<Vertex> min_degree_ordering(const Graph& g);
std::vector<Vertex> min_fill_ordering(const Graph& g);

/// Decomposition induced by eliminating vertices in `order`. Components are
/// chained so the result is always a single tree.
TreeDecomposition decomposition_from_ordering(const Graph& g, std::span<const Vertex> order);

/// Narrower of the min-degree and min-fill decompositions (min-degree on
/// ties), validated before return.
TreeDecomposition heuristic_decomposition(const Graph& g);

/// Treewidth lower bounds.
int degeneracy(const Graph& g);
int minor_min_width(const Graph& g);
inline int treewidth_lower_bound(const Graph& g) {
  const int a = degeneracy(g);
  const int b = minor_min_width(g);
  return a > b ? a : b;
}

/// ceil(100 * delta^3 * sqrt(2k)), saturating at INT64_MAX. Requires k >= 1
/// and delta >= 0.
std::int64_t width_threshold(int k, int delta);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
  NiceKind kind = NiceKind::leaf;
  Vertex vertex = -1;  // introduced or forgotten vertex
  std::vector<int> children;
  std::vector<Vertex> bag;  // sorted
};

/// Rooted nice decomposition. Nodes are stored children-first, so a plain
/// index scan is a valid bottom-up order; the root is the last node.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width = -1;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
};

/// Throws ContractViolation naming the violated condition when `td` is not
/// a valid decomposition of `g`.
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

/// Structural check of the nice form plus decomposition validity.
std::optional<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

/// PACE `.td` text: `s td <bags> <max bag size> <n>`, then `b <id> <vertices>`
/// lines and tree edges, all 1-based.
void write_pace_td(std::ostream& out, const TreeDecomposition& td, int num_vertices);

}  // namespace udgpath
