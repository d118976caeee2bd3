#include "udgpath/marking.hpp"

#include <algorithm>
#include <string>

#include "udgpath/errors.hpp"

namespace udgpath {

void MarkingBudgets::validate() const {
  if (q1 < 1) throw InputError("marking budget q1 must be at least 1");
  if (q2 < 0) throw InputError("marking budget q2 must be non-negative");
}

const std::vector<Vertex>& MarkingResult::marked_in(Cell c) const {
  static const std::vector<Vertex> kEmpty;
  auto it = mark_star.find(c);
  return it == mark_star.end() ? kEmpty : it->second;
}

std::vector<Vertex> MarkingResult::unmarked_in(const CliqueGrid& rep, Cell c) const {
  std::vector<Vertex> out;
  for (Vertex v : rep.members(c)) {
    if (!is_marked(v)) out.push_back(v);
  }
  return out;
}

MarkingResult run_marking(const Graph& graph, const CliqueGrid& rep, MarkingBudgets budgets) {
  budgets.validate();
  const int n = graph.num_vertices();
  if (static_cast<int>(rep.cell_of.size()) != n) {
    throw ContractViolation("representation does not match graph");
  }
  auto cell = [&](Vertex v) { return rep.cell_of[static_cast<std::size_t>(v)]; };

  MarkingResult res;
  res.budgets = budgets;
  res.phase1.assign(static_cast<std::size_t>(n), 0);
  res.marked.assign(static_cast<std::size_t>(n), 0);

  // Scanning u ascending and its sorted neighbors yields each pair's edges
  // already in (min id, max id) order.
  std::map<CellPair, std::vector<Edge>> cross;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : graph.neighbors(u)) {
      if (v > u && cell(u) != cell(v)) cross[make_cell_pair(cell(u), cell(v))].emplace_back(u, v);
    }
  }

  // Phase I: matchings of distinct pairs are independent of each other.
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);
  int pair_id = 0;
  for (const auto& [pair, edges] : cross) {
    std::vector<Edge> matching;
    for (auto [u, v] : edges) {
      if (static_cast<int>(matching.size()) == budgets.q1) break;
      if (stamp[static_cast<std::size_t>(u)] == pair_id || stamp[static_cast<std::size_t>(v)] == pair_id) continue;
      stamp[static_cast<std::size_t>(u)] = pair_id;
      stamp[static_cast<std::size_t>(v)] = pair_id;
      matching.emplace_back(u, v);
      res.phase1[static_cast<std::size_t>(u)] = 1;
      res.phase1[static_cast<std::size_t>(v)] = 1;
    }
    res.mark1_pairs.emplace(pair, std::move(matching));
    ++pair_id;
  }

  // Phase II: each Phase-I vertex marks its q2 smallest neighbors per cell.
  for (Vertex v = 0; v < n; ++v) {
    if (!res.phase1[static_cast<std::size_t>(v)]) continue;
    res.marked[static_cast<std::size_t>(v)] = 1;
    std::map<Cell, int> taken;
    for (Vertex u : graph.neighbors(v)) {
      if (cell(u) == cell(v)) continue;
      int& count = taken[cell(u)];
      if (count < budgets.q2) {
        ++count;
        res.marked[static_cast<std::size_t>(u)] = 1;
      }
    }
  }

  for (const auto& [c, members] : rep.cells) {
    auto& list = res.mark_star[c];
    for (Vertex v : members) {
      if (res.is_marked(v)) list.push_back(v);
    }
  }
  return res;
}

EdgeClass classify_edge(const Graph& graph, Edge e, const CliqueGrid& rep, const MarkingResult& marks) {
  const auto [u, v] = e;
  if (u < 0 || v < 0 || u >= graph.num_vertices() || v >= graph.num_vertices() || !graph.has_edge(u, v)) {
    throw ContractViolation("classify_edge: {" + std::to_string(u) + "," + std::to_string(v) +
                            "} is not an edge of the graph");
  }
  if (rep.cell_of[static_cast<std::size_t>(u)] == rep.cell_of[static_cast<std::size_t>(v)]) {
    return EdgeClass::intra_cell;
  }
  return marks.is_marked(u) && marks.is_marked(v) ? EdgeClass::good : EdgeClass::bad;
}

namespace {

// Is there a subpath of `seq` whose endpoints u, v are admissible and whose
// internal vertex set is exactly `pool` minus {u, v}? `in_pool` marks pool
// members; `admissible` marks the allowed endpoint positions.
bool has_flanked_run(std::span<const Vertex> seq, Variant variant, const std::vector<char>& in_pool,
                     std::size_t pool_size, const std::vector<char>& admissible) {
  const std::size_t len = seq.size();
  auto pooled = [&](std::size_t pos) { return in_pool[pos] != 0; };

  if (variant == Variant::cycle) {
    // Endpoints are marked, hence never in the pool.
    if (pool_size + 1 > len) return false;
    for (std::size_t a = 0; a < len; ++a) {
      if (!admissible[a]) continue;
      const std::size_t b = (a + pool_size + 1) % len;
      if (!admissible[b]) continue;
      bool ok = true;
      for (std::size_t s = 1; s <= pool_size && ok; ++s) ok = pooled((a + s) % len);
      if (ok) return true;
    }
    return false;
  }

  std::vector<std::size_t> outside(len + 1, 0);  // prefix count of non-pool positions
  for (std::size_t i = 0; i < len; ++i) outside[i + 1] = outside[i] + (pooled(i) ? 0 : 1);
  for (std::size_t a = 0; a < len; ++a) {
    if (!admissible[a]) continue;
    const std::size_t base = pool_size - (pooled(a) ? 1 : 0);
    // v outside the pool, then v inside it.
    for (std::size_t drop : {std::size_t{0}, std::size_t{1}}) {
      if (base < drop) continue;
      const std::size_t b = a + 1 + base - drop;
      if (b >= len || !admissible[b]) continue;
      if ((pooled(b) ? 1u : 0u) != drop) continue;
      if (outside[b] - outside[a + 1] == 0) return true;
    }
  }
  return false;
}

}  // namespace

CellClass classify_cell(const Graph& graph, std::span<const Vertex> seq, Variant variant, Cell cell,
                        const CliqueGrid& rep, const MarkingResult& marks) {
  if (!is_solution(graph, seq, variant)) {
    throw ContractViolation(std::string("classify_cell: sequence is not a ") + std::string(to_string(variant)) +
                            " of the graph");
  }
  const std::size_t len = seq.size();
  auto in_cell = [&](Vertex v) { return rep.cell_of[static_cast<std::size_t>(v)] == cell; };
  auto unmarked = [&](Vertex v) { return in_cell(v) && !marks.is_marked(v); };

  const std::size_t cell_unmarked = marks.unmarked_in(rep, cell).size();
  std::size_t visited_unmarked = 0;
  for (Vertex v : seq) visited_unmarked += unmarked(v) ? 1 : 0;

  const bool equals_unmarked = visited_unmarked == len && len == cell_unmarked;
  const bool inside_unmarked = visited_unmarked == len;
  const bool avoids_unmarked = visited_unmarked == 0;

  std::vector<char> admissible(len, 0);
  std::vector<char> in_pool(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = seq[i];
    const bool endpoint = variant == Variant::path && (i == 0 || i + 1 == len);
    admissible[i] = (in_cell(v) && marks.is_marked(v)) || (endpoint && in_cell(v));
    in_pool[i] = unmarked(v);
  }
  // Good needs the run to hold every unmarked vertex of the cell, nice only
  // the visited ones. Both pools agree on the positions of the sequence.
  const bool good_run = visited_unmarked == cell_unmarked &&
                        has_flanked_run(seq, variant, in_pool, cell_unmarked, admissible);
  if (equals_unmarked || avoids_unmarked || good_run) return CellClass::good;

  const bool nice_run = has_flanked_run(seq, variant, in_pool, visited_unmarked, admissible);
  if (inside_unmarked || nice_run) return CellClass::nice_not_good;
  return CellClass::bad;
}

bool all_cells_good(const Graph& graph, std::span<const Vertex> seq, Variant variant, const CliqueGrid& rep,
                    const MarkingResult& marks) {
  std::vector<Cell> touched;
  for (Vertex v : seq) {
    if (!marks.is_marked(v)) touched.push_back(rep.cell_of[static_cast<std::size_t>(v)]);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (Cell c : touched) {
    if (classify_cell(graph, seq, variant, c, rep, marks) != CellClass::good) return false;
  }
  if (touched.empty() && !is_solution(graph, seq, variant)) {
    throw ContractViolation("all_cells_good: sequence is not a valid solution");
  }
  return true;
}

}  // namespace udgpath
