#pragma once

// Test-only helpers: seeded random instances and an exact treewidth oracle.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "udgpath/geometry.hpp"
#include "udgpath/graph.hpp"

namespace udgpath::testing {

inline DiskSet random_disks(std::mt19937_64& rng, int n, double box) {
  std::uniform_real_distribution<double> coord(0.0, box);
  DiskSet d;
  for (int i = 0; i < n; ++i) {
    const double x = coord(rng);
    d.points.push_back({x, coord(rng)});
  }
  return d;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline std::vector<std::int64_t> random_weights(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> w(lo, hi);
  std::vector<std::int64_t> out;
  for (int i = 0; i < n; ++i) out.push_back(w(rng));
  return out;
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

/// Exact treewidth by the subset recurrence
///   TW(S) = min_{v in S} max(TW(S \ v), |Q(S \ v, v)|),
/// where Q(S, v) are the vertices outside S + v reachable from v through S.
inline int exact_treewidth(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return -1;
  using Mask = std::uint32_t;
  std::vector<Mask> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  auto q_size = [&](Mask s, Vertex v) {
    Mask reach = Mask{1} << v;
    Mask frontier = reach;
    Mask out = 0;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
      out |= next & ~s & ~(Mask{1} << v);
      next &= s & ~reach;
      reach |= next;
      frontier = next;
    }
    return std::popcount(out);
  };
  const Mask full = (Mask{1} << n) - 1;
  std::vector<int> tw(static_cast<std::size_t>(full) + 1, n);
  tw[0] = -1;
  for (Mask s = 1; s <= full; ++s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const Mask without = s & ~(Mask{1} << v);
      tw[s] = std::min(tw[s], std::max(tw[without], q_size(without, v)));
    }
  }
  return tw[full];
}

}  // namespace udgpath::testing
