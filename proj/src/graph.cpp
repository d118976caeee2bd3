#include "udgpath/graph.hpp"

#include <algorithm>
#include <string>

#include "udgpath/errors.hpp"

namespace udgpath {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ContractViolation("edge endpoint out of range");
    }
    if (u == v) throw ContractViolation("self-loop on vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::int64_t twice = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += static_cast<std::int64_t>(list.size());
  }
  g.num_edges_ = twice / 2;
  return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adj) {
  Graph g;
  g.adj_ = std::move(adj);
  const int n = g.num_vertices();
  std::int64_t twice = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& list = g.adj_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] < 0 || list[i] >= n || list[i] == v) {
        throw ContractViolation("bad neighbor in adjacency of vertex " + std::to_string(v));
      }
      if (i > 0 && list[i - 1] >= list[i]) {
        throw ContractViolation("adjacency of vertex " + std::to_string(v) + " not strictly sorted");
      }
    }
    twice += static_cast<std::int64_t>(list.size());
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.adj_[static_cast<std::size_t>(v)]) {
      if (!g.has_edge(u, v)) throw ContractViolation("adjacency is not symmetric");
    }
  }
  g.num_edges_ = twice / 2;
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string_view to_string(Variant v) { return v == Variant::path ? "path" : "cycle"; }

Variant parse_variant(std::string_view s) {
  if (s == "path") return Variant::path;
  if (s == "cycle") return Variant::cycle;
  throw InputError("unknown variant '" + std::string(s) + "' (expected path or cycle)");
}

namespace {

bool distinct_in_range(const Graph& g, std::span<const Vertex> seq) {
  std::vector<Vertex> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.num_vertices())) return false;
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

bool is_simple_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty() || !distinct_in_range(g, seq)) return false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (!g.has_edge(seq[i - 1], seq[i])) return false;
  }
  return true;
}

bool is_simple_cycle(const Graph& g, std::span<const Vertex> seq) {
  if (seq.size() < 3 || !is_simple_path(g, seq)) return false;
  return g.has_edge(seq.back(), seq.front());
}

std::vector<Vertex> canonical_path(std::vector<Vertex> seq) {
  if (seq.size() > 1 && seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
  return seq;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> seq) {
  if (seq.size() < 3) return seq;
  auto min_it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), min_it, seq.end());
  if (seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
  return seq;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::vector<Vertex>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex u : g.neighbors(vertices[i])) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), u);
      if (it != vertices.end() && *it == u) {
        adj[i].push_back(static_cast<Vertex>(it - vertices.begin()));
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace udgpath
