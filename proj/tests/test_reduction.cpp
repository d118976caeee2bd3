#include <gtest/gtest.h>

#include "support.hpp"
#include "udgpath/errors.hpp"
#include "udgpath/oracle.hpp"
#include "udgpath/pipeline.hpp"
#include "udgpath/reduction.hpp"

namespace udgpath {
namespace {

Prepared prep(std::vector<Point> pts, MarkingBudgets budgets = {}) { return prepare(DiskSet{std::move(pts)}, budgets); }

void check_structure(const Prepared& p) {
  const WeightedGraph& r = p.reduced;
  for (Vertex v = 0; v < r.num_vertices(); ++v) {
    const Vertex orig = r.original[static_cast<std::size_t>(v)];
    EXPECT_EQ(r.cell[static_cast<std::size_t>(v)], p.rep.cell_of[static_cast<std::size_t>(orig)]);
    if (r.is_aggregate(v)) {
      EXPECT_FALSE(p.marks.is_marked(orig));
      const auto& back = r.back_map[static_cast<std::size_t>(v)];
      EXPECT_EQ(back, p.marks.unmarked_in(p.rep, r.cell[static_cast<std::size_t>(v)]));
      EXPECT_EQ(r.weight[static_cast<std::size_t>(v)], static_cast<std::int64_t>(back.size()));
      EXPECT_EQ(back.front(), orig);
      for (Vertex u : r.graph.neighbors(v)) {
        EXPECT_FALSE(r.is_aggregate(u));
        EXPECT_EQ(r.cell[static_cast<std::size_t>(u)], r.cell[static_cast<std::size_t>(v)]);
      }
    } else {
      EXPECT_TRUE(p.marks.is_marked(orig));
      EXPECT_EQ(r.weight[static_cast<std::size_t>(v)], 1);
    }
    for (Vertex u : r.graph.neighbors(v)) {
      EXPECT_TRUE(p.graph.has_edge(orig, r.original[static_cast<std::size_t>(u)]));
    }
  }
  EXPECT_EQ(r.max_degree, r.graph.max_degree());
}

TEST(BuildReduced, AggregateAdjacentOnlyToOwnMarked) {
  // Cell (1,1): five unmarked vertices plus two marked via a neighbor cell.
  // q1 = 2 forces exactly two matched vertices per side; q2 = 0.
  std::vector<Point> pts;
  for (int i = 0; i < 7; ++i) pts.push_back({0.1 * i, 0.5});
  pts.push_back({1.5, 0.5});
  pts.push_back({1.6, 0.6});
  const Prepared p = prep(pts, {2, 0});
  check_structure(p);
  const WeightedGraph& r = p.reduced;
  int aggregates = 0;
  for (Vertex v = 0; v < r.num_vertices(); ++v) {
    if (!r.is_aggregate(v)) continue;
    ++aggregates;
    EXPECT_EQ(r.weight[static_cast<std::size_t>(v)], 5);
    EXPECT_EQ(r.graph.degree(v), 2);
  }
  EXPECT_EQ(aggregates, 1);
}

TEST(BuildReduced, AllMarkedMeansNoAggregates) {
  const Prepared p = prep({{0, 0}, {1.5, 0}, {3, 0}, {3, 1.5}});
  for (Vertex v = 0; v < 4; ++v) ASSERT_TRUE(p.marks.is_marked(v));
  EXPECT_EQ(p.reduced.num_vertices(), 4);
  EXPECT_EQ(p.reduced.graph, p.graph);
  for (auto w : p.reduced.weight) EXPECT_EQ(w, 1);
}

// Two cells with unmarked vertices x (weight 2) and y (weight 3), all other
// vertices of weight 1, as in the worked example of the reduction.
TEST(BuildReduced, WorkedExampleWeights) {
  const std::vector<Point> pts{
      {0, 0},     {0, 0.5},   {0, 0.9},   {0.9, 0.5},  {2.5, 0.5},  // cell (1,1) plus a marked partner
      {10.9, 0.5},                                                  // v
      {12.1, 0.1}, {12.1, 0.5}, {12.1, 0.9}, {12.4, 0.3}, {12.4, 0.7}, {12.7, 0.5},
      {12.95, 0.95},
  };
  const Prepared p = prep(pts, {241, 5});
  check_structure(p);
  const WeightedGraph& r = p.reduced;
  std::vector<std::int64_t> heavy;
  for (Vertex v = 0; v < r.num_vertices(); ++v) {
    if (r.weight[static_cast<std::size_t>(v)] > 1) heavy.push_back(r.weight[static_cast<std::size_t>(v)]);
  }
  std::sort(heavy.begin(), heavy.end());
  EXPECT_EQ(heavy, (std::vector<std::int64_t>{2, 3}));
  const auto x = r.local_id(0);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(r.is_aggregate(*x));
  EXPECT_EQ(r.weight[static_cast<std::size_t>(*x)], 3);
  EXPECT_EQ(classify_edge(p.graph, {5, 11}, p.rep, p.marks), EdgeClass::bad);
}

TEST(LiftSolution, ExpandsAggregateInPlace) {
  std::vector<Point> pts;
  for (int i = 0; i < 4; ++i) pts.push_back({0.1 * i, 0.5});
  pts.push_back({1.5, 0.5});
  pts.push_back({1.6, 0.6});
  const Prepared p = prep(pts, {2, 0});
  const WeightedGraph& r = p.reduced;
  // Marked: 0,1 (cell 1,1) and 4,5; unmarked 2,3 aggregate at local id of 2.
  const Vertex c = *r.local_id(2);
  ASSERT_TRUE(r.is_aggregate(c));
  const Vertex m1 = *r.local_id(0);
  const Vertex m2 = *r.local_id(1);
  const std::vector<Vertex> seq{m1, c, m2};
  const auto lifted = lift_solution(r, seq, Variant::path);
  EXPECT_EQ(lifted, (std::vector<Vertex>{0, 2, 3, 1}));
  EXPECT_TRUE(is_simple_path(p.graph, lifted));
  const std::vector<Vertex> plain{*r.local_id(4), *r.local_id(5)};
  EXPECT_EQ(lift_solution(r, plain, Variant::path), (std::vector<Vertex>{4, 5}));
  const std::vector<Vertex> broken{m1, *r.local_id(5)};
  if (!r.graph.has_edge(broken[0], broken[1])) {
    EXPECT_THROW(lift_solution(r, broken, Variant::path), ContractViolation);
  }
  // The aggregate lost its edges leaving the cell.
  EXPECT_THROW(lift_solution(r, std::vector<Vertex>{c, *r.local_id(4)}, Variant::path), ContractViolation);
}

TEST(LiftSolution, ClosuresLiftToCycles) {
  // One cell with five unmarked vertices and nothing else: G* is a lone
  // aggregate, yet G has a 5-cycle.
  std::vector<Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({0.15 * i, 0.2});
  const Prepared p = prep(pts);
  ASSERT_EQ(p.reduced.num_vertices(), 1);
  const std::vector<Vertex> lone{0};
  EXPECT_TRUE(is_aggregate_closure(p.reduced, lone));
  const auto lifted = lift_solution(p.reduced, lone, Variant::cycle);
  EXPECT_TRUE(is_simple_cycle(p.graph, lifted));
  EXPECT_EQ(lifted.size(), 5U);
}

TEST(LiftSolution, RandomPathsPreserveWeight) {
  std::mt19937_64 rng(150);
  int lifted_count = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const DiskSet d = testing::random_disks(rng, 10 + static_cast<int>(rng() % 30), 3.0 + static_cast<double>(rng() % 4));
    const Prepared p = prepare(d, {1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)});
    check_structure(p);
    const WeightedGraph& r = p.reduced;
    // Random walk without repeats in G*.
    std::vector<Vertex> seq{static_cast<Vertex>(rng() % static_cast<std::uint64_t>(r.num_vertices()))};
    std::vector<char> used(static_cast<std::size_t>(r.num_vertices()), 0);
    used[static_cast<std::size_t>(seq[0])] = 1;
    while (true) {
      std::vector<Vertex> options;
      for (Vertex u : r.graph.neighbors(seq.back())) {
        if (!used[static_cast<std::size_t>(u)]) options.push_back(u);
      }
      if (options.empty()) break;
      seq.push_back(options[rng() % options.size()]);
      used[static_cast<std::size_t>(seq.back())] = 1;
    }
    const auto lifted = lift_solution(r, seq, Variant::path);
    ASSERT_TRUE(is_simple_path(p.graph, lifted));
    ASSERT_EQ(static_cast<std::int64_t>(lifted.size()), r.weight_of(seq));
    ++lifted_count;
  }
  EXPECT_EQ(lifted_count, 150);
}

TEST(ProjectSolution, MarkedOnlyPathIsUnchanged) {
  const Prepared p = prep({{0, 0}, {1.5, 0}, {3, 0}});
  const std::vector<Vertex> seq{0, 1, 2};
  const auto proj = project_solution(p.graph, p.rep, p.marks, p.reduced, seq, Variant::path);
  EXPECT_EQ(proj, (std::vector<Vertex>{0, 1, 2}));
}

TEST(ProjectSolution, FullRunCollapses) {
  std::vector<Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({0.1 * i, 0.5});
  pts.push_back({1.5, 0.5});
  pts.push_back({1.6, 0.6});
  const Prepared p = prep(pts, {2, 0});
  const std::vector<Vertex> seq{0, 2, 3, 4, 1};
  const auto proj = project_solution(p.graph, p.rep, p.marks, p.reduced, seq, Variant::path);
  EXPECT_EQ(proj.size(), 3U);
  EXPECT_EQ(p.reduced.weight_of(proj), 5);
  const std::vector<Vertex> partial{0, 2, 3, 1};
  try {
    project_solution(p.graph, p.rep, p.marks, p.reduced, partial, Variant::path);
    FAIL() << "expected ContractViolation";
  } catch (const ContractViolation& e) {
    EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos);
  }
}

TEST(ProjectSolution, OracleRoundTrip) {
  std::mt19937_64 rng(100);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const DiskSet d = testing::random_disks(rng, 4 + static_cast<int>(rng() % 6), 2.5);
    const Prepared p = prepare(d, {});
    for (Variant variant : {Variant::path, Variant::cycle}) {
      const OracleResult best =
          variant == Variant::path ? longest_path_bruteforce(p.graph) : longest_cycle_bruteforce(p.graph);
      if (!best.value) continue;
      const GoodCellCheck good = check_good_cell_existence(p.graph, p.rep, p.marks, static_cast<int>(*best.value),
                                                           variant);
      ASSERT_TRUE(good.holds) << good.counterexample;
      const auto proj = project_solution(p.graph, p.rep, p.marks, p.reduced, good.witness, variant);
      const auto lifted = lift_solution(p.reduced, proj, variant);
      ASSERT_TRUE(is_solution(p.graph, lifted, variant));
      ASSERT_EQ(lifted.size(), good.witness.size());
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace udgpath
