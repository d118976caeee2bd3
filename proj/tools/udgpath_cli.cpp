// udgpath: generate, solve, verify, render and inspect unit disk instances.
//
// Exit codes: 0 yes / agree / success, 1 no / disagree, 2 any error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "udgpath/decomposition.hpp"
#include "udgpath/errors.hpp"
#include "udgpath/generators.hpp"
#include "udgpath/instance_io.hpp"
#include "udgpath/oracle.hpp"
#include "udgpath/pipeline.hpp"
#include "udgpath/render.hpp"
#include "udgpath/report.hpp"

namespace {

using namespace udgpath;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

struct BudgetFlags {
  int q1 = MarkingBudgets{}.q1;
  int q2 = MarkingBudgets{}.q2;
  void attach(CLI::App* app) {
    app->add_option("--q1", q1, "Phase-I matching budget per cell pair")->capture_default_str();
    app->add_option("--q2", q2, "Phase-II neighbor budget per vertex and cell")->capture_default_str();
  }
  MarkingBudgets get() const { return {q1, q2}; }
};

int cmd_gen(const GeneratorSpec& spec, const std::string& out_path) {
  std::ostringstream text;
  write_instance(text, generate(spec));
  write_text(out_path, text.str());
  return kExitYes;
}

struct SolveFlags {
  std::string instance;
  int k = 1;
  std::string variant = "path";
  bool witness = false;
  bool json = false;
  std::optional<std::int64_t> threshold;
  std::string engine = "matching";
  std::int64_t max_states = SolveRequest{}.dp_state_budget;
  BudgetFlags budgets;
};

int cmd_solve(const SolveFlags& f) {
  SolveRequest req;
  req.disks = read_instance_file(f.instance);
  req.k = f.k;
  req.variant = parse_variant(f.variant);
  req.budgets = f.budgets.get();
  req.want_witness = f.witness;
  req.threshold_override = f.threshold;
  req.engine = parse_engine(f.engine);
  req.dp_state_budget = f.max_states;
  const SolveReport rep = solve(req);
  if (f.json) {
    std::cout << report_json(rep) << "\n";
  } else {
    std::cout << report_text(rep) << report_line(rep) << "\n";
  }
  return rep.answer == Answer::yes ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& instance, std::optional<int> k, const std::string& variant_flag,
               const BudgetFlags& budgets) {
  const DiskSet disks = read_instance_file(instance);
  const EnumerationLimits limits;
  if (disks.size() > limits.max_n) {
    throw RefusalError("verify: instance has " + std::to_string(disks.size()) + " points; the oracle cap is " +
                       std::to_string(limits.max_n));
  }
  const Graph g = build_udg(disks);
  std::vector<Variant> variants;
  if (variant_flag == "both") {
    variants = {Variant::path, Variant::cycle};
  } else {
    variants = {parse_variant(variant_flag)};
  }

  bool all_agree = true;
  for (Variant variant : variants) {
    const OracleResult truth =
        variant == Variant::path ? longest_path_bruteforce(g, limits) : longest_cycle_bruteforce(g, limits);
    const int lo = k ? *k : 1;
    const int hi = k ? *k : disks.size();
    for (int kk = lo; kk <= hi; ++kk) {
      SolveRequest req;
      req.disks = disks;
      req.k = kk;
      req.variant = variant;
      req.budgets = budgets.get();
      req.want_witness = true;
      const SolveReport rep = solve(req);
      const bool oracle_yes = truth.value && *truth.value >= effective_target(kk, variant);
      const bool pipeline_yes = rep.answer == Answer::yes;
      const bool agree = oracle_yes == pipeline_yes;
      all_agree = all_agree && agree;
      std::cout << to_string(variant) << " k=" << kk << " pipeline=" << (pipeline_yes ? "yes" : "no")
                << " oracle=" << (oracle_yes ? "yes" : "no") << (agree ? " agree" : " DISAGREE") << "\n";
    }
  }
  std::cout << (all_agree ? "verify: all answers agree" : "verify: answers differ") << "\n";
  return all_agree ? kExitYes : kExitNo;
}

int cmd_render(const std::string& instance, const std::string& out_path, std::optional<int> k,
               const std::string& variant_flag, const BudgetFlags& budgets, bool no_edges) {
  const DiskSet disks = read_instance_file(instance);
  const Variant variant = parse_variant(variant_flag);
  const Prepared prepared = prepare(disks, budgets.get());
  std::vector<Vertex> witness;
  if (k) {
    SolveRequest req;
    req.disks = disks;
    req.k = *k;
    req.variant = variant;
    req.budgets = budgets.get();
    req.want_witness = true;
    const SolveReport rep = solve(req);
    if (rep.witness) witness = *rep.witness;
  }
  RenderOptions opts;
  opts.draw_edges = !no_edges;
  write_text(out_path, render_svg(disks, prepared, witness, variant, opts));
  return kExitYes;
}

int cmd_inspect(const std::string& instance, const BudgetFlags& budgets, const std::string& td_out) {
  const DiskSet disks = read_instance_file(instance);
  const Prepared p = prepare(disks, budgets.get());
  std::cout << "n=" << p.graph.num_vertices() << " m=" << p.graph.num_edges() << " max_degree=" << p.graph.max_degree()
            << "\n";
  std::cout << "grid: t=" << p.rep.t << " occupied_cells=" << p.rep.cells.size() << "\n";
  std::int64_t marked = 0;
  std::int64_t largest = 0;
  for (const auto& [c, m] : p.marks.mark_star) {
    marked += static_cast<std::int64_t>(m.size());
    largest = std::max<std::int64_t>(largest, static_cast<std::int64_t>(m.size()));
  }
  std::cout << "marking: q1=" << p.marks.budgets.q1 << " q2=" << p.marks.budgets.q2 << " marked=" << marked
            << " largest_cell=" << largest << " bound=" << p.marks.budgets.mark_bound() << "\n";
  int aggregates = 0;
  for (Vertex v = 0; v < p.reduced.num_vertices(); ++v) aggregates += p.reduced.is_aggregate(v) ? 1 : 0;
  std::cout << "reduced: n=" << p.reduced.num_vertices() << " m=" << p.reduced.graph.num_edges()
            << " aggregates=" << aggregates << " delta=" << p.reduced.max_degree << "\n";
  if (p.reduced.num_vertices() > 0) {
    const TreeDecomposition td = heuristic_decomposition(p.reduced.graph);
    std::cout << "decomposition: bags=" << td.num_bags() << " width=" << td.width()
              << " lower_bound=" << treewidth_lower_bound(p.reduced.graph) << "\n";
    if (!td_out.empty()) {
      std::ostringstream text;
      write_pace_td(text, td, p.reduced.num_vertices());
      write_text(td_out, text.str());
    }
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long path and long cycle on unit disk graphs"};
  app.require_subcommand(1);

  GeneratorSpec gen_spec;
  std::string gen_kind = "uniform";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a random or structured instance");
  gen->add_option("--kind", gen_kind, "uniform | clusters | chain | lattice")->capture_default_str();
  gen->add_option("--n", gen_spec.n, "Number of points")->capture_default_str();
  gen->add_option("--box", gen_spec.box, "Side length of the sampling square")->capture_default_str();
  gen->add_option("--seed", gen_spec.seed, "Random seed")->capture_default_str();
  gen->add_option("--clusters", gen_spec.clusters, "Cluster count (clusters)")->capture_default_str();
  gen->add_option("--spread", gen_spec.spread, "Cluster standard deviation (clusters)")->capture_default_str();
  gen->add_option("--spacing", gen_spec.spacing, "Step between points (chain)")->capture_default_str();
  gen->add_option("--pitch", gen_spec.pitch, "Lattice step (lattice)")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  SolveFlags sf;
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether a long path or cycle exists");
  solve_cmd->add_option("instance", sf.instance, "Instance file")->required();
  solve_cmd->add_option("--k", sf.k, "Target number of vertices")->required();
  solve_cmd->add_option("--variant", sf.variant, "path | cycle")->capture_default_str();
  solve_cmd->add_flag("--witness", sf.witness, "Print a validated witness");
  solve_cmd->add_option("--tw-threshold", sf.threshold, "Override the treewidth shortcut threshold");
  solve_cmd->add_option("--engine", sf.engine, "matching | rankbased")->capture_default_str();
  solve_cmd->add_option("--max-states", sf.max_states, "DP table entry cap, 0 for none")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  solve_cmd->add_flag("--json", sf.json, "Print one JSON object");
  sf.budgets.attach(solve_cmd);

  std::string verify_instance;
  std::optional<int> verify_k;
  std::string verify_variant = "both";
  BudgetFlags verify_budgets;
  auto* verify = app.add_subcommand("verify", "Compare the solver with the brute-force oracle");
  verify->add_option("instance", verify_instance, "Instance file")->required();
  verify->add_option("--k", verify_k, "Single k (default: every k from 1 to n)");
  verify->add_option("--variant", verify_variant, "path | cycle | both")->capture_default_str();
  verify_budgets.attach(verify);

  std::string render_instance;
  std::string render_out;
  std::optional<int> render_k;
  std::string render_variant = "path";
  bool render_no_edges = false;
  BudgetFlags render_budgets;
  auto* render = app.add_subcommand("render", "Draw the instance as SVG");
  render->add_option("instance", render_instance, "Instance file")->required();
  render->add_option("-o,--out", render_out, "Output SVG (default stdout)");
  render->add_option("--k", render_k, "Solve for k and overlay the witness");
  render->add_option("--variant", render_variant, "path | cycle")->capture_default_str();
  render->add_flag("--no-edges", render_no_edges, "Skip edges");
  render_budgets.attach(render);

  std::string inspect_instance;
  std::string inspect_td;
  BudgetFlags inspect_budgets;
  auto* inspect = app.add_subcommand("inspect", "Print grid, marking and reduction statistics");
  inspect->add_option("instance", inspect_instance, "Instance file")->required();
  inspect->add_option("--td-out", inspect_td, "Write the reduced graph's decomposition in PACE .td format");
  inspect_budgets.attach(inspect);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*gen) {
      gen_spec.kind = parse_generator_kind(gen_kind);
      return cmd_gen(gen_spec, gen_out);
    }
    if (*solve_cmd) return cmd_solve(sf);
    if (*verify) return cmd_verify(verify_instance, verify_k, verify_variant, verify_budgets);
    if (*render) {
      return cmd_render(render_instance, render_out, render_k, render_variant, render_budgets, render_no_edges);
    }
    if (*inspect) return cmd_inspect(inspect_instance, inspect_budgets, inspect_td);
  } catch (const std::exception& e) {
    std::cerr << "udgpath: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
