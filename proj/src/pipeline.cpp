#include "udgpath/pipeline.hpp"

#include <chrono>
#include <numeric>

#include "udgpath/decomposition.hpp"
#include "udgpath/errors.hpp"

namespace udgpath {

std::string_view to_string(Answer a) { return a == Answer::yes ? "yes" : "no"; }
std::string_view to_string(Branch b) { return b == Branch::shortcut ? "shortcut" : "dp"; }

namespace {

class StageClock {
 public:
  explicit StageClock(SolveStats& stats) : stats_(stats) {}

  template <class F>
  auto run(const char* stage, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    auto record = [&] {
      const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
      stats_.timings.emplace_back(stage, took.count());
    };
    try {
      if constexpr (std::is_void_v<decltype(body())>) {
        body();
        record();
      } else {
        auto out = body();
        record();
        return out;
      }
    } catch (const ContractViolation& e) {
      throw ContractViolation(std::string("stage ") + stage + ": " + e.what());
    }
  }

 private:
  SolveStats& stats_;
};

}  // namespace

Prepared prepare(const DiskSet& disks, MarkingBudgets budgets) {
  budgets.validate();
  Prepared p;
  p.graph = build_udg(disks);
  p.rep = build_clique_grid(disks, p.graph);
  p.marks = run_marking(p.graph, p.rep, budgets);
  p.reduced = build_reduced(p.graph, p.rep, p.marks);
  return p;
}

ReducedOptimum solve_reduced(const WeightedGraph& reduced, Variant variant, DpEngine engine,
                             std::optional<std::int64_t> stop_at, std::int64_t state_budget) {
  ReducedOptimum out;
  auto offer = [&](const DpResult& r, std::span<const Vertex> to_reduced) {
    out.best.states += r.states;
    if (!r.weight || (out.best.weight && *r.weight <= *out.best.weight)) return;
    out.best.weight = r.weight;
    out.best.witness.clear();
    for (Vertex v : r.witness) out.best.witness.push_back(to_reduced[static_cast<std::size_t>(v)]);
  };
  auto reached = [&] { return stop_at && out.best.weight && *out.best.weight >= *stop_at; };

  if (variant == Variant::cycle) {
    const DpResult closure = best_aggregate_closure(reduced);
    std::vector<Vertex> identity(static_cast<std::size_t>(reduced.num_vertices()));
    std::iota(identity.begin(), identity.end(), 0);
    offer(closure, identity);
  }

  for (const auto& comp : connected_components(reduced.graph)) {
    if (reached()) break;
    std::int64_t total = 0;
    for (Vertex v : comp) total += reduced.weight[static_cast<std::size_t>(v)];
    // A component too light to beat the incumbent cannot matter.
    if (out.best.weight && total <= *out.best.weight) continue;
    if (stop_at && total < *stop_at) continue;
    if (variant == Variant::cycle && comp.size() < 3) continue;

    const Graph sub = induced_subgraph(reduced.graph, comp);
    std::vector<std::int64_t> w;
    w.reserve(comp.size());
    for (Vertex v : comp) w.push_back(reduced.weight[static_cast<std::size_t>(v)]);
    const NiceTreeDecomposition ntd = make_nice(sub, heuristic_decomposition(sub));
    out.width = std::max(out.width, ntd.width);
    ++out.components_solved;
    const DpOptions opt{engine, state_budget, stop_at};
    const DpResult r = variant == Variant::path ? max_weight_path(sub, w, ntd, opt) : max_weight_cycle(sub, w, ntd, opt);
    offer(r, comp);
  }
  return out;
}

SolveReport solve(const SolveRequest& req) {
  if (req.k < 1) throw InputError("k must be at least 1");
  req.budgets.validate();

  SolveReport rep;
  rep.k = req.k;
  rep.variant = req.variant;
  SolveStats& stats = rep.stats;
  StageClock clock(stats);
  const int target = effective_target(req.k, req.variant);

  Prepared p;
  p.graph = clock.run("udg", [&] { return build_udg(req.disks); });
  rep.n = p.graph.num_vertices();
  rep.m = p.graph.num_edges();
  p.rep = clock.run("clique_grid", [&] { return build_clique_grid(req.disks, p.graph); });
  p.marks = clock.run("marking", [&] { return run_marking(p.graph, p.rep, req.budgets); });
  for (const auto& [cell, marked] : p.marks.mark_star) {
    ++stats.mark_histogram[static_cast<std::int64_t>(marked.size())];
    stats.marked_vertices += static_cast<std::int64_t>(marked.size());
  }
  stats.occupied_cells = static_cast<std::int64_t>(p.rep.cells.size());
  p.reduced = clock.run("reduction", [&] { return build_reduced(p.graph, p.rep, p.marks); });
  stats.reduced_n = p.reduced.num_vertices();
  stats.reduced_m = p.reduced.graph.num_edges();
  stats.delta = p.reduced.max_degree;

  stats.certified = !req.threshold_override.has_value();
  stats.threshold = req.threshold_override.value_or(width_threshold(target, stats.delta));

  // The shortcut answers yes without a witness, so it is skipped whenever a
  // witness is wanted.
  if (!req.want_witness) {
    const bool fires = clock.run("threshold", [&] {
      stats.lower_bound = treewidth_lower_bound(p.reduced.graph);
      return stats.lower_bound > stats.threshold;
    });
    if (fires) {
      rep.branch = Branch::shortcut;
      rep.answer = Answer::yes;
      return rep;
    }
  }

  rep.branch = Branch::dp;
  const ReducedOptimum opt = clock.run("dp", [&] {
    return solve_reduced(p.reduced, req.variant, req.engine, std::optional<std::int64_t>(target), req.dp_state_budget);
  });
  stats.width = opt.width;
  stats.dp_states = opt.best.states;
  stats.components_solved = opt.components_solved;
  stats.best_weight = opt.best.weight;
  rep.answer = opt.best.weight && *opt.best.weight >= target ? Answer::yes : Answer::no;

  if (req.want_witness && rep.answer == Answer::yes) {
    rep.witness = clock.run("lift", [&] {
      std::vector<Vertex> lifted = lift_solution(p.reduced, opt.best.witness, req.variant);
      if (!is_solution(p.graph, lifted, req.variant) || static_cast<int>(lifted.size()) < target ||
          static_cast<std::int64_t>(lifted.size()) != *opt.best.weight) {
        throw ContractViolation("lifted witness failed validation");
      }
      return canonical(std::move(lifted), req.variant);
    });
  }
  return rep;
}

}  // namespace udgpath
