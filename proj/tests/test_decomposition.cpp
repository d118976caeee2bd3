#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "udgpath/decomposition.hpp"
#include "udgpath/errors.hpp"
#include "udgpath/pipeline.hpp"

namespace udgpath {
namespace {

TEST(Heuristic, PathHasWidthOne) {
  const Graph g = testing::path_graph(6);
  const TreeDecomposition td = heuristic_decomposition(g);
  EXPECT_EQ(td.width(), 1);
  EXPECT_FALSE(validate_decomposition(g, td).has_value());
}

TEST(Heuristic, CompleteGraphOnFive) {
  const Graph g = testing::complete_graph(5);
  EXPECT_EQ(heuristic_decomposition(g).width(), 4);
  EXPECT_EQ(degeneracy(g), 4);
  EXPECT_EQ(minor_min_width(g), 4);
}

TEST(Heuristic, CycleAndStar) {
  EXPECT_EQ(heuristic_decomposition(testing::cycle_graph(7)).width(), 2);
  EXPECT_EQ(heuristic_decomposition(testing::star_graph(5)).width(), 1);
  EXPECT_EQ(heuristic_decomposition(Graph(3)).width(), 0);
  EXPECT_THROW(heuristic_decomposition(Graph(0)), ContractViolation);
}

TEST(Heuristic, DisconnectedGraphStillOneTree) {
  const std::vector<Edge> e{{0, 1}, {2, 3}, {3, 4}, {4, 2}};
  const Graph g = Graph::from_edges(7, e);
  const TreeDecomposition td = heuristic_decomposition(g);
  EXPECT_FALSE(validate_decomposition(g, td).has_value());
  EXPECT_EQ(static_cast<int>(td.tree_edges.size()), td.num_bags() - 1);
  EXPECT_EQ(td.width(), 2);
}

TEST(Validator, CatchesEachViolation) {
  const Graph g = testing::path_graph(3);
  TreeDecomposition td;
  td.bags = {{0, 1}, {1, 2}};
  td.tree_edges = {{0, 1}};
  EXPECT_FALSE(validate_decomposition(g, td).has_value());

  TreeDecomposition missing_edge = td;
  missing_edge.bags = {{0, 1}, {2}};
  EXPECT_TRUE(validate_decomposition(g, missing_edge).has_value());

  TreeDecomposition split = td;
  split.bags = {{0, 1}, {1, 2}, {0}};
  split.tree_edges = {{0, 1}, {1, 2}};
  EXPECT_TRUE(validate_decomposition(g, split).has_value());

  TreeDecomposition forest = td;
  forest.tree_edges.clear();
  EXPECT_TRUE(validate_decomposition(g, forest).has_value());

  TreeDecomposition missing_vertex = td;
  missing_vertex.bags = {{0, 1}, {1}};
  EXPECT_TRUE(validate_decomposition(g, missing_vertex).has_value());
}

TEST(Heuristic, AtLeastExactTreewidthOnSmallGraphs) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = testing::random_graph(rng, n, 0.15 + 0.05 * static_cast<double>(rng() % 10));
    const int exact = testing::exact_treewidth(g);
    const TreeDecomposition td = heuristic_decomposition(g);
    ASSERT_FALSE(validate_decomposition(g, td).has_value());
    EXPECT_GE(td.width(), exact);
    EXPECT_LE(treewidth_lower_bound(g), exact) << "lower bound above exact treewidth, trial " << trial;
  }
}

TEST(Heuristic, ValidOnReducedUdgs) {
  std::mt19937_64 rng(80);
  for (int trial = 0; trial < 40; ++trial) {
    const DiskSet d = testing::random_disks(rng, 20 + static_cast<int>(rng() % 61), 6.0);
    const Prepared p = prepare(d, {1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)});
    const Graph& g = p.reduced.graph;
    for (const TreeDecomposition& td : {heuristic_decomposition(g), decomposition_from_ordering(g, min_degree_ordering(g)),
                                        decomposition_from_ordering(g, min_fill_ordering(g))}) {
      const auto problem = validate_decomposition(g, td);
      ASSERT_FALSE(problem.has_value()) << *problem;
    }
  }
}

TEST(MakeNice, SingleBagChain) {
  const Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  TreeDecomposition td;
  td.bags = {{0, 1}};
  const NiceTreeDecomposition ntd = make_nice(g, td);
  EXPECT_FALSE(validate_nice(g, ntd).has_value());
  ASSERT_EQ(ntd.num_nodes(), 5);
  EXPECT_EQ(ntd.nodes[0].kind, NiceKind::leaf);
  EXPECT_EQ(ntd.nodes[1].kind, NiceKind::introduce);
  EXPECT_EQ(ntd.nodes[2].kind, NiceKind::introduce);
  EXPECT_EQ(ntd.nodes[3].kind, NiceKind::forget);
  EXPECT_EQ(ntd.nodes[4].kind, NiceKind::forget);
  EXPECT_TRUE(ntd.nodes[4].bag.empty());
  EXPECT_EQ(ntd.width, 1);
}

TEST(MakeNice, RejectsInvalidInput) {
  const Graph g = testing::path_graph(3);
  TreeDecomposition td;
  td.bags = {{0, 1}, {2}};
  td.tree_edges = {{0, 1}};
  try {
    make_nice(g, td);
    FAIL() << "expected ContractViolation";
  } catch (const ContractViolation& e) {
    EXPECT_NE(std::string(e.what()).find("invalid decomposition"), std::string::npos);
  }
}

TEST(MakeNice, PreservesWidthOnRandomCases) {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 25);
    const Graph g = testing::random_graph(rng, n, 0.05 + 0.03 * static_cast<double>(rng() % 10));
    const TreeDecomposition td = trial % 2 ? decomposition_from_ordering(g, min_fill_ordering(g))
                                           : decomposition_from_ordering(g, min_degree_ordering(g));
    const NiceTreeDecomposition ntd = make_nice(g, td);
    EXPECT_EQ(ntd.width, td.width());
    const auto problem = validate_nice(g, ntd);
    ASSERT_FALSE(problem.has_value()) << *problem;
    int widest = -1;
    for (const NiceNode& node : ntd.nodes) widest = std::max(widest, static_cast<int>(node.bag.size()) - 1);
    EXPECT_EQ(widest, td.width());
    EXPECT_LE(ntd.num_nodes(), 4 * (td.width() + 2) * (n + 1) + 2 * td.num_bags());
  }
}

TEST(Threshold, Examples) {
  EXPECT_EQ(width_threshold(1, 1), 142);
  EXPECT_EQ(width_threshold(8, 2), 3200);
  EXPECT_EQ(width_threshold(2, 1), 200);
  EXPECT_EQ(width_threshold(5, 0), 0);
  EXPECT_THROW(width_threshold(0, 1), ContractViolation);
  EXPECT_EQ(width_threshold(1 << 30, 1 << 20), INT64_MAX);
}

TEST(LowerBounds, Basics) {
  EXPECT_EQ(degeneracy(testing::path_graph(5)), 1);
  EXPECT_EQ(degeneracy(testing::cycle_graph(5)), 2);
  EXPECT_EQ(minor_min_width(testing::cycle_graph(9)), 2);
  EXPECT_EQ(treewidth_lower_bound(Graph(4)), 0);
}

TEST(PaceExport, Format) {
  const Graph g = testing::path_graph(3);
  TreeDecomposition td;
  td.bags = {{0, 1}, {1, 2}};
  td.tree_edges = {{0, 1}};
  std::ostringstream out;
  write_pace_td(out, td, 3);
  EXPECT_EQ(out.str(), "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
}

}  // namespace
}  // namespace udgpath
