#include "udgpath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "udgpath/errors.hpp"

namespace udgpath {

void EnumerationLimits::validate() const {
  if (max_n < 1 || max_n > 16) throw InputError("oracle: max_n must lie in [1, 16]");
  if (max_paths < 1) throw InputError("oracle: max_paths must be positive");
}

namespace {

using Mask = std::uint32_t;

void require_small(const Graph& g, const EnumerationLimits& limits) {
  limits.validate();
  if (g.num_vertices() > limits.max_n) {
    throw RefusalError("oracle: instance has " + std::to_string(g.num_vertices()) + " vertices, cap is " +
                       std::to_string(limits.max_n));
  }
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> out(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) out[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return out;
}

constexpr std::int8_t kUnknown = -2;
constexpr std::int8_t kImpossible = -1;

}  // namespace

OracleResult longest_path_bruteforce(const Graph& g, EnumerationLimits limits) {
  require_small(g, limits);
  const int n = g.num_vertices();
  OracleResult res;
  if (n == 0) return res;
  const auto nbr = neighbor_masks(g);
  // memo[v][mask]: most vertices that can still be appended after v.
  std::vector<std::int8_t> memo(static_cast<std::size_t>(n) << n, kUnknown);
  auto at = [&](Vertex v, Mask mask) -> std::int8_t& { return memo[(static_cast<std::size_t>(v) << n) | mask]; };
  std::function<int(Vertex, Mask)> extend = [&](Vertex v, Mask mask) -> int {
    std::int8_t& slot = at(v, mask);
    if (slot != kUnknown) return slot;
    int best = 0;
    for (Mask free = nbr[static_cast<std::size_t>(v)] & ~mask; free; free &= free - 1) {
      const Vertex u = std::countr_zero(free);
      best = std::max(best, 1 + extend(u, mask | (Mask{1} << u)));
    }
    return slot = static_cast<std::int8_t>(best);
  };

  Vertex start = 0;
  int best = -1;
  for (Vertex v = 0; v < n; ++v) {
    const int len = 1 + extend(v, Mask{1} << v);
    if (len > best) {
      best = len;
      start = v;
    }
  }
  std::vector<Vertex> seq{start};
  Mask mask = Mask{1} << start;
  for (Vertex v = start; extend(v, mask) > 0;) {
    const int want = extend(v, mask) - 1;
    for (Mask free = nbr[static_cast<std::size_t>(v)] & ~mask; free; free &= free - 1) {
      const Vertex u = std::countr_zero(free);
      if (extend(u, mask | (Mask{1} << u)) == want) {
        v = u;
        break;
      }
    }
    seq.push_back(v);
    mask |= Mask{1} << v;
  }
  res.value = best;
  res.witness = canonical_path(std::move(seq));
  return res;
}

OracleResult longest_cycle_bruteforce(const Graph& g, EnumerationLimits limits) {
  require_small(g, limits);
  const int n = g.num_vertices();
  OracleResult res;
  const auto nbr = neighbor_masks(g);
  std::vector<std::int8_t> memo;
  for (Vertex s = 0; s < n; ++s) {
    // Cycles whose smallest vertex is s. memo[v][mask]: most vertices that
    // can still be appended after v before closing back to s.
    const Mask allowed = ~((Mask{1} << s) - 1) & ~(Mask{1} << s);
    memo.assign(static_cast<std::size_t>(n) << n, kUnknown);
    auto at = [&](Vertex v, Mask mask) -> std::int8_t& { return memo[(static_cast<std::size_t>(v) << n) | mask]; };
    std::function<int(Vertex, Mask)> extend = [&](Vertex v, Mask mask) -> int {
      std::int8_t& slot = at(v, mask);
      if (slot != kUnknown) return slot;
      int best = (std::popcount(mask) >= 3 && ((nbr[static_cast<std::size_t>(v)] >> s) & 1U)) ? 0 : kImpossible;
      for (Mask free = nbr[static_cast<std::size_t>(v)] & allowed & ~mask; free; free &= free - 1) {
        const Vertex u = std::countr_zero(free);
        const int sub = extend(u, mask | (Mask{1} << u));
        if (sub >= 0) best = std::max(best, 1 + sub);
      }
      return slot = static_cast<std::int8_t>(best);
    };
    const int ext = extend(s, Mask{1} << s);
    if (ext < 0 || (res.value && 1 + ext <= *res.value)) continue;
    std::vector<Vertex> seq{s};
    Mask mask = Mask{1} << s;
    for (Vertex v = s; extend(v, mask) > 0;) {
      const int want = extend(v, mask) - 1;
      for (Mask free = nbr[static_cast<std::size_t>(v)] & allowed & ~mask; free; free &= free - 1) {
        const Vertex u = std::countr_zero(free);
        if (extend(u, mask | (Mask{1} << u)) == want) {
          v = u;
          break;
        }
      }
      seq.push_back(v);
      mask |= Mask{1} << v;
    }
    res.value = 1 + ext;
    res.witness = canonical_cycle(std::move(seq));
  }
  return res;
}

OracleResult longest_path_held_karp(const Graph& g, EnumerationLimits limits) {
  require_small(g, limits);
  const int n = g.num_vertices();
  OracleResult res;
  if (n == 0) return res;
  const auto nbr = neighbor_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  // ends[mask]: vertices v such that some path covers exactly mask and ends at v.
  std::vector<Mask> ends(static_cast<std::size_t>(full) + 1, 0);
  for (Vertex v = 0; v < n; ++v) ends[Mask{1} << v] = Mask{1} << v;
  Mask best_mask = 1;
  for (Mask mask = 1; mask <= full; ++mask) {
    if (!ends[mask]) continue;
    if (std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
    for (Mask e = ends[mask]; e; e &= e - 1) {
      const Vertex v = std::countr_zero(e);
      for (Mask free = nbr[static_cast<std::size_t>(v)] & ~mask; free; free &= free - 1) {
        const Vertex u = std::countr_zero(free);
        ends[mask | (Mask{1} << u)] |= Mask{1} << u;
      }
    }
  }
  std::vector<Vertex> seq;
  Mask mask = best_mask;
  Vertex v = std::countr_zero(ends[mask]);
  while (true) {
    seq.push_back(v);
    const Mask rest = mask & ~(Mask{1} << v);
    if (!rest) break;
    const Mask candidates = ends[rest] & nbr[static_cast<std::size_t>(v)];
    v = std::countr_zero(candidates);
    mask = rest;
  }
  res.value = std::popcount(best_mask);
  res.witness = canonical_path(std::move(seq));
  return res;
}

OracleResult longest_cycle_held_karp(const Graph& g, EnumerationLimits limits) {
  require_small(g, limits);
  const int n = g.num_vertices();
  OracleResult res;
  if (n < 3) return res;
  const auto nbr = neighbor_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  // ends[mask]: v such that a path from the lowest vertex of mask to v
  // covers exactly mask.
  std::vector<Mask> ends(static_cast<std::size_t>(full) + 1, 0);
  for (Vertex v = 0; v < n; ++v) ends[Mask{1} << v] = Mask{1} << v;
  Mask best_mask = 0;
  Vertex best_end = -1;
  for (Mask mask = 1; mask <= full; ++mask) {
    if (!ends[mask]) continue;
    const Vertex s = std::countr_zero(mask);
    if (std::popcount(mask) >= 3 && std::popcount(mask) > std::popcount(best_mask)) {
      const Mask closing = ends[mask] & nbr[static_cast<std::size_t>(s)];
      if (closing) {
        best_mask = mask;
        best_end = std::countr_zero(closing);
      }
    }
    const Mask above = ~((Mask{1} << (s + 1)) - 1);
    for (Mask e = ends[mask]; e; e &= e - 1) {
      const Vertex v = std::countr_zero(e);
      for (Mask free = nbr[static_cast<std::size_t>(v)] & ~mask & above & full; free; free &= free - 1) {
        const Vertex u = std::countr_zero(free);
        ends[mask | (Mask{1} << u)] |= Mask{1} << u;
      }
    }
  }
  if (!best_mask) return res;
  std::vector<Vertex> seq;
  Mask mask = best_mask;
  Vertex v = best_end;
  while (true) {
    seq.push_back(v);
    const Mask rest = mask & ~(Mask{1} << v);
    if (!rest) break;
    v = std::countr_zero(ends[rest] & nbr[static_cast<std::size_t>(v)]);
    mask = rest;
  }
  res.value = std::popcount(best_mask);
  res.witness = canonical_cycle(std::move(seq));
  return res;
}

namespace {

class WeightedEnumerator {
 public:
  WeightedEnumerator(const Graph& g, std::span<const std::int64_t> w, const EnumerationLimits& limits, Variant variant)
      : g_(g), w_(w), limits_(limits), variant_(variant) {
    require_small(g, limits);
    if (static_cast<int>(w.size()) != g.num_vertices()) throw ContractViolation("oracle: weight count mismatch");
  }

  OracleResult run() {
    for (Vertex s = 0; s < g_.num_vertices(); ++s) {
      seq_.assign(1, s);
      visited_.assign(static_cast<std::size_t>(g_.num_vertices()), 0);
      visited_[static_cast<std::size_t>(s)] = 1;
      walk(s, w_[static_cast<std::size_t>(s)]);
    }
    if (best_.value) best_.witness = canonical(best_.witness, variant_);
    return best_;
  }

 private:
  void record(std::int64_t total) {
    if (!best_.value || total > *best_.value) {
      best_.value = total;
      best_.witness = seq_;
    }
  }

  void walk(Vertex v, std::int64_t total) {
    if (++steps_ > limits_.max_paths) throw RefusalError("oracle: enumeration exceeded max_paths");
    const Vertex s = seq_.front();
    if (variant_ == Variant::path) {
      record(total);
    } else if (seq_.size() >= 3 && g_.has_edge(v, s)) {
      record(total);
    }
    for (Vertex u : g_.neighbors(v)) {
      if (visited_[static_cast<std::size_t>(u)]) continue;
      if (variant_ == Variant::cycle && u < s) continue;
      visited_[static_cast<std::size_t>(u)] = 1;
      seq_.push_back(u);
      walk(u, total + w_[static_cast<std::size_t>(u)]);
      seq_.pop_back();
      visited_[static_cast<std::size_t>(u)] = 0;
    }
  }

  const Graph& g_;
  std::span<const std::int64_t> w_;
  EnumerationLimits limits_;
  Variant variant_;
  std::vector<Vertex> seq_;
  std::vector<char> visited_;
  std::int64_t steps_ = 0;
  OracleResult best_;
};

}  // namespace

OracleResult max_weight_path_bruteforce(const Graph& g, std::span<const std::int64_t> weights,
                                        EnumerationLimits limits) {
  return WeightedEnumerator(g, weights, limits, Variant::path).run();
}

OracleResult max_weight_cycle_bruteforce(const Graph& g, std::span<const std::int64_t> weights,
                                         EnumerationLimits limits) {
  return WeightedEnumerator(g, weights, limits, Variant::cycle).run();
}

GoodCellCheck check_good_cell_existence(const Graph& g, const CliqueGrid& rep, const MarkingResult& marks, int k,
                                        Variant variant, EnumerationLimits limits) {
  require_small(g, limits);
  const int target = variant == Variant::cycle ? std::max(k, 3) : std::max(k, 1);
  const OracleResult longest =
      variant == Variant::path ? longest_path_bruteforce(g, limits) : longest_cycle_bruteforce(g, limits);
  if (!longest.value || *longest.value < target) {
    throw ContractViolation("check_good_cell_existence: no solution on " + std::to_string(target) + " vertices");
  }

  GoodCellCheck out;
  const int n = g.num_vertices();
  std::vector<Vertex> seq;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::int64_t steps = 0;

  // Each path is visited once (first endpoint smaller), each cycle once
  // (smallest vertex first, second vertex smaller than the last).
  std::function<bool(Vertex)> walk = [&](Vertex v) -> bool {
    if (++steps > limits.max_paths) throw RefusalError("check_good_cell_existence: enumeration exceeded max_paths");
    const Vertex s = seq.front();
    if (static_cast<int>(seq.size()) >= target) {
      bool counts = false;
      if (variant == Variant::path) {
        counts = seq.size() == 1 || s < v;
      } else {
        counts = g.has_edge(v, s) && seq[1] < seq.back();
      }
      if (counts) {
        ++out.inspected;
        if (all_cells_good(g, seq, variant, rep, marks)) {
          out.holds = true;
          out.witness = seq;
          return true;
        }
      }
    }
    for (Vertex u : g.neighbors(v)) {
      if (visited[static_cast<std::size_t>(u)] || (variant == Variant::cycle && u < s)) continue;
      visited[static_cast<std::size_t>(u)] = 1;
      seq.push_back(u);
      const bool found = walk(u);
      seq.pop_back();
      visited[static_cast<std::size_t>(u)] = 0;
      if (found) return true;
    }
    return false;
  };

  for (Vertex s = 0; s < n && !out.holds; ++s) {
    seq.assign(1, s);
    visited[static_cast<std::size_t>(s)] = 1;
    walk(s);
    visited[static_cast<std::size_t>(s)] = 0;
  }

  if (!out.holds) {
    std::ostringstream msg;
    msg << "no all-good " << to_string(variant) << " on >= " << target << " vertices; n=" << n
        << " q1=" << marks.budgets.q1 << " q2=" << marks.budgets.q2 << " edges:";
    for (auto [a, b] : g.edges()) msg << ' ' << a << '-' << b;
    out.counterexample = msg.str();
  }
  return out;
}

}  // namespace udgpath
