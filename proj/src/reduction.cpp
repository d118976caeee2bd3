#include "udgpath/reduction.hpp"

#include <algorithm>
#include <string>

#include "udgpath/errors.hpp"

namespace udgpath {

std::int64_t WeightedGraph::weight_of(std::span<const Vertex> seq) const {
  std::int64_t total = 0;
  for (Vertex v : seq) total += weight[static_cast<std::size_t>(v)];
  return total;
}

std::optional<Vertex> WeightedGraph::local_id(Vertex original_id) const {
  auto it = std::lower_bound(original.begin(), original.end(), original_id);
  if (it == original.end() || *it != original_id) return std::nullopt;
  return static_cast<Vertex>(it - original.begin());
}

WeightedGraph build_reduced(const Graph& graph, const CliqueGrid& rep, const MarkingResult& marks) {
  const int n = graph.num_vertices();
  if (static_cast<int>(marks.marked.size()) != n || static_cast<int>(rep.cell_of.size()) != n) {
    throw ContractViolation("marking was not computed for this graph");
  }

  // Representative of each cell's unmarked set: its smallest id.
  std::vector<char> aggregate(static_cast<std::size_t>(n), 0);
  std::vector<char> kept(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) kept[static_cast<std::size_t>(v)] = marks.marked[static_cast<std::size_t>(v)];
  for (const auto& [c, members] : rep.cells) {
    for (Vertex v : members) {
      if (!marks.is_marked(v)) {
        aggregate[static_cast<std::size_t>(v)] = 1;
        kept[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }

  WeightedGraph out;
  for (Vertex v = 0; v < n; ++v) {
    if (kept[static_cast<std::size_t>(v)]) out.original.push_back(v);
  }
  const std::size_t size = out.original.size();
  out.weight.resize(size, 1);
  out.origin.resize(size, Origin::marked);
  out.cell.resize(size);
  out.back_map.resize(size);

  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < size; ++i) local[static_cast<std::size_t>(out.original[i])] = static_cast<Vertex>(i);

  for (std::size_t i = 0; i < size; ++i) {
    const Vertex v = out.original[i];
    out.cell[i] = rep.cell_of[static_cast<std::size_t>(v)];
    if (aggregate[static_cast<std::size_t>(v)]) {
      out.origin[i] = Origin::aggregate;
      out.back_map[i] = marks.unmarked_in(rep, out.cell[i]);
      out.weight[i] = static_cast<std::int64_t>(out.back_map[i].size());
    }
  }

  // Induced edges of G', minus aggregate edges that leave the aggregate's cell.
  std::vector<std::vector<Vertex>> adj(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Vertex v = out.original[i];
    for (Vertex u : graph.neighbors(v)) {
      const Vertex j = local[static_cast<std::size_t>(u)];
      if (j < 0) continue;
      const bool same_cell = out.cell[i] == out.cell[static_cast<std::size_t>(j)];
      if (!same_cell && (out.origin[i] == Origin::aggregate || out.origin[static_cast<std::size_t>(j)] == Origin::aggregate)) {
        continue;
      }
      adj[i].push_back(j);
    }
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  out.max_degree = out.graph.max_degree();
  return out;
}

bool is_aggregate_closure(const WeightedGraph& reduced, std::span<const Vertex> seq) {
  const int n = reduced.num_vertices();
  for (Vertex v : seq) {
    if (v < 0 || v >= n) return false;
  }
  if (seq.size() == 1) {
    return reduced.is_aggregate(seq[0]) && reduced.weight[static_cast<std::size_t>(seq[0])] >= 3;
  }
  if (seq.size() == 2) {
    const Vertex a = seq[0];
    const Vertex b = seq[1];
    if (!reduced.graph.has_edge(a, b)) return false;
    const auto heavy = [&](Vertex v) { return reduced.is_aggregate(v) && reduced.weight[static_cast<std::size_t>(v)] >= 2; };
    return heavy(a) || heavy(b);
  }
  return false;
}

bool is_reduced_solution(const WeightedGraph& reduced, std::span<const Vertex> seq, Variant variant) {
  if (variant == Variant::path) return is_simple_path(reduced.graph, seq);
  return is_simple_cycle(reduced.graph, seq) || is_aggregate_closure(reduced, seq);
}

std::vector<Vertex> lift_solution(const WeightedGraph& reduced, std::span<const Vertex> seq, Variant variant) {
  if (!is_reduced_solution(reduced, seq, variant)) {
    throw ContractViolation(std::string("lift_solution: input is not a ") + std::string(to_string(variant)) +
                            " of the reduced graph");
  }
  std::vector<Vertex> out;
  for (Vertex v : seq) {
    if (reduced.is_aggregate(v)) {
      const auto& expansion = reduced.back_map[static_cast<std::size_t>(v)];
      out.insert(out.end(), expansion.begin(), expansion.end());
    } else {
      out.push_back(reduced.original[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

std::vector<Vertex> project_solution(const Graph& graph, const CliqueGrid& rep, const MarkingResult& marks,
                                     const WeightedGraph& reduced, std::span<const Vertex> seq, Variant variant) {
  if (!is_solution(graph, seq, variant)) {
    throw ContractViolation("project_solution: input is not a valid solution in G");
  }
  std::vector<Cell> touched;
  for (Vertex v : seq) {
    if (!marks.is_marked(v)) touched.push_back(rep.cell_of[static_cast<std::size_t>(v)]);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (Cell c : touched) {
    if (classify_cell(graph, seq, variant, c, rep, marks) != CellClass::good) {
      throw ContractViolation("project_solution: cell " + to_string(c) + " is not good");
    }
  }

  // Start a cycle at a marked vertex so no unmarked run wraps around.
  std::vector<Vertex> order(seq.begin(), seq.end());
  if (variant == Variant::cycle) {
    auto first_marked = std::find_if(order.begin(), order.end(), [&](Vertex v) { return marks.is_marked(v); });
    if (first_marked != order.end()) std::rotate(order.begin(), first_marked, order.end());
  }

  std::vector<Vertex> out;
  std::size_t i = 0;
  while (i < order.size()) {
    const Vertex v = order[i];
    if (marks.is_marked(v)) {
      out.push_back(*reduced.local_id(v));
      ++i;
      continue;
    }
    const Cell c = rep.cell_of[static_cast<std::size_t>(v)];
    std::vector<Vertex> run;
    while (i < order.size() && !marks.is_marked(order[i])) {
      if (rep.cell_of[static_cast<std::size_t>(order[i])] != c) {
        throw ContractViolation("project_solution: unmarked run leaves cell " + to_string(c));
      }
      run.push_back(order[i]);
      ++i;
    }
    std::sort(run.begin(), run.end());
    if (run != marks.unmarked_in(rep, c)) {
      throw ContractViolation("project_solution: run does not cover the unmarked set of cell " + to_string(c));
    }
    out.push_back(*reduced.local_id(run.front()));
  }

  if (!is_reduced_solution(reduced, out, variant) || reduced.weight_of(out) != static_cast<std::int64_t>(seq.size())) {
    throw ContractViolation("project_solution: projection is not a solution of matching weight");
  }
  return out;
}

}  // namespace udgpath
