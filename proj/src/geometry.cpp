#include "udgpath/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "udgpath/errors.hpp"

namespace udgpath {

namespace {

// Cell indices are kept well inside int range so neighbor offsets cannot
// overflow.
constexpr double kMaxSpan = 1e9;

void validate_points(const DiskSet& disks) {
  if (disks.points.empty()) throw InputError("disk set is empty");
  for (std::size_t i = 0; i < disks.points.size(); ++i) {
    const Point& p = disks.points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError("non-finite coordinate at point index " + std::to_string(i));
    }
  }
}

struct Extent {
  double x_min;
  double y_min;
};

Extent extent_of(const DiskSet& disks) {
  Extent e{disks.points[0].x, disks.points[0].y};
  for (const Point& p : disks.points) {
    e.x_min = std::min(e.x_min, p.x);
    e.y_min = std::min(e.y_min, p.y);
  }
  for (std::size_t i = 0; i < disks.points.size(); ++i) {
    const Point& p = disks.points[i];
    if (p.x - e.x_min > kMaxSpan || p.y - e.y_min > kMaxSpan) {
      throw InputError("coordinate span too large at point index " + std::to_string(i));
    }
  }
  return e;
}

// Zero-based bucket index; floor semantics put boundary points in the
// higher cell.
int bucket(double value, double origin) {
  return static_cast<int>(std::floor((value - origin) / kCellSide));
}

std::uint64_t bucket_key(int bx, int by) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(bx)) << 32) |
         static_cast<std::uint32_t>(by);
}

bool within_two(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= 4.0;
}

}  // namespace

std::string to_string(Cell c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

const std::vector<Vertex>& CliqueGrid::members(Cell c) const {
  static const std::vector<Vertex> kEmpty;
  auto it = cells.find(c);
  return it == cells.end() ? kEmpty : it->second;
}

UnitDiskGraph build_udg(const DiskSet& disks) {
  validate_points(disks);
  const Extent ext = extent_of(disks);
  const int n = disks.size();

  std::unordered_map<std::uint64_t, std::vector<Vertex>> buckets;
  std::vector<std::pair<int, int>> where(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const Point& p = disks.points[static_cast<std::size_t>(v)];
    const int bx = bucket(p.x, ext.x_min);
    const int by = bucket(p.y, ext.y_min);
    where[static_cast<std::size_t>(v)] = {bx, by};
    buckets[bucket_key(bx, by)].push_back(v);
  }

  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto [bx, by] = where[static_cast<std::size_t>(v)];
    const Point& p = disks.points[static_cast<std::size_t>(v)];
    for (int dx = -2; dx <= 2; ++dx) {
      for (int dy = -2; dy <= 2; ++dy) {
        auto it = buckets.find(bucket_key(bx + dx, by + dy));
        if (it == buckets.end()) continue;
        for (Vertex u : it->second) {
          if (u != v && within_two(p, disks.points[static_cast<std::size_t>(u)])) {
            adj[static_cast<std::size_t>(v)].push_back(u);
          }
        }
      }
    }
    std::sort(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
  }
  return Graph::from_adjacency(std::move(adj));
}

UnitDiskGraph build_udg_naive(const DiskSet& disks) {
  validate_points(disks);
  const int n = disks.size();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (within_two(disks.points[static_cast<std::size_t>(u)], disks.points[static_cast<std::size_t>(v)])) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

CliqueGrid build_clique_grid(const DiskSet& disks, const UnitDiskGraph& graph) {
  validate_points(disks);
  if (graph.num_vertices() != disks.size()) {
    throw ContractViolation("graph was not built from this disk set");
  }
  const Extent ext = extent_of(disks);
  CliqueGrid rep;
  rep.x_min = ext.x_min;
  rep.y_min = ext.y_min;
  rep.cell_of.reserve(disks.points.size());
  for (Vertex v = 0; v < disks.size(); ++v) {
    const Point& p = disks.points[static_cast<std::size_t>(v)];
    const Cell c{1 + bucket(p.x, ext.x_min), 1 + bucket(p.y, ext.y_min)};
    rep.cell_of.push_back(c);
    rep.cells[c].push_back(v);
    rep.t = std::max({rep.t, c.i, c.j});
  }
  return rep;
}

std::optional<std::string> check_clique_grid(const Graph& graph, const CliqueGrid& rep) {
  if (static_cast<int>(rep.cell_of.size()) != graph.num_vertices()) {
    return "cell map does not cover every vertex";
  }
  std::size_t covered = 0;
  for (const auto& [cell, members] : rep.cells) {
    covered += members.size();
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (rep.cell_of[static_cast<std::size_t>(members[a])] != cell) {
        return "vertex " + std::to_string(members[a]) + " listed in the wrong cell";
      }
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!graph.has_edge(members[a], members[b])) {
          return "cell " + to_string(cell) + " is not a clique";
        }
      }
    }
  }
  if (covered != rep.cell_of.size()) return "cells do not partition the vertex set";
  for (auto [u, v] : graph.edges()) {
    const Cell cu = rep.cell_of[static_cast<std::size_t>(u)];
    const Cell cv = rep.cell_of[static_cast<std::size_t>(v)];
    if (chebyshev(cu, cv) > 2) {
      return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} spans cells " + to_string(cu) + " and " +
             to_string(cv);
    }
  }
  return std::nullopt;
}

}  // namespace udgpath
