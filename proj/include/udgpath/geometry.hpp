#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udgpath/graph.hpp"

namespace udgpath {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

/// Centers of unit-radius disks. Duplicates are distinct disks.
struct DiskSet {
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
};

/// Intersection graph of the disks: {i, j} is an edge iff the centers are
/// at Euclidean distance at most 2.
using UnitDiskGraph = Graph;

struct Cell {
  int i = 0;
  int j = 0;
  auto operator<=>(const Cell&) const = default;
};

inline int chebyshev(Cell a, Cell b) {
  const int di = a.i > b.i ? a.i - b.i : b.i - a.i;
  const int dj = a.j > b.j ? a.j - b.j : b.j - a.j;
  return di > dj ? di : dj;
}

std::string to_string(Cell c);

/// Cell map f: V(G) -> [t] x [t] such that every cell induces a clique and
/// every edge joins cells at Chebyshev distance at most 2.
struct CliqueGrid {
  std::vector<Cell> cell_of;
  int t = 0;
  /// Occupied cells in row-major order; members sorted ascending.
  std::map<Cell, std::vector<Vertex>> cells;
  double x_min = 0.0;
  double y_min = 0.0;

  const std::vector<Vertex>& members(Cell c) const;
};

/// Grid side used for both neighbor bucketing and the clique-grid cells.
inline constexpr double kCellSide = 1.0;

/// Exact UDG via side-1 spatial buckets. Throws InputError on an empty set
/// or a non-finite coordinate (naming the index).
UnitDiskGraph build_udg(const DiskSet& disks);

/// O(n^2) all-pairs construction, kept as a debug fallback and test oracle.
UnitDiskGraph build_udg_naive(const DiskSet& disks);

CliqueGrid build_clique_grid(const DiskSet& disks, const UnitDiskGraph& graph);

/// Checks both clique-grid conditions exhaustively; returns a description of
/// the first violation found.
std::optional<std::string> check_clique_grid(const Graph& graph, const CliqueGrid& rep);

}  // namespace udgpath
