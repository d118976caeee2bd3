#include <gtest/gtest.h>

#include "support.hpp"
#include "udgpath/errors.hpp"
#include "udgpath/graph.hpp"

namespace udgpath {
namespace {

TEST(Graph, FromEdgesMergesDuplicatesAndSortsNeighbors) {
  const std::vector<Edge> e{{2, 0}, {0, 1}, {1, 0}, {0, 2}};
  const Graph g = Graph::from_edges(3, e);
  EXPECT_EQ(g.num_edges(), 2);
  ASSERT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.neighbors(0)[0], 1);
  EXPECT_EQ(g.neighbors(0)[1], 2);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.max_degree(), 2);
}

TEST(Graph, RejectsSelfLoopsAndBadAdjacency) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(2, loop), ContractViolation);
  EXPECT_THROW(Graph::from_adjacency({{1}, {}}), ContractViolation);
  EXPECT_THROW(Graph::from_adjacency({{2, 1}, {0}, {0}}), ContractViolation);
  EXPECT_NO_THROW(Graph::from_adjacency({{1}, {0}}));
}

TEST(Graph, PathAndCycleValidators) {
  const Graph c4 = testing::cycle_graph(4);
  const std::vector<Vertex> full{0, 1, 2, 3};
  const std::vector<Vertex> repeat{0, 1, 0};
  const std::vector<Vertex> gap{0, 2};
  EXPECT_TRUE(is_simple_path(c4, full));
  EXPECT_TRUE(is_simple_cycle(c4, full));
  EXPECT_FALSE(is_simple_path(c4, repeat));
  EXPECT_FALSE(is_simple_path(c4, gap));
  EXPECT_FALSE(is_simple_path(c4, std::vector<Vertex>{}));
  EXPECT_TRUE(is_simple_path(c4, std::vector<Vertex>{2}));
  // Two vertices never form a cycle.
  EXPECT_FALSE(is_simple_cycle(c4, std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(is_simple_cycle(testing::path_graph(4), full));
}

TEST(Graph, CanonicalForms) {
  EXPECT_EQ(canonical_path({3, 1, 2}), (std::vector<Vertex>{2, 1, 3}));
  EXPECT_EQ(canonical_path({1, 2, 3}), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(canonical_cycle({3, 0, 2, 1}), (std::vector<Vertex>{0, 2, 1, 3}));
  EXPECT_EQ(canonical_cycle({2, 3, 0, 1}), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Graph, ComponentsAndInducedSubgraph) {
  const std::vector<Edge> e{{0, 3}, {3, 4}, {1, 2}};
  const Graph g = Graph::from_edges(6, e);
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3U);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 3, 4}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{5}));
  const Graph sub = induced_subgraph(g, comps[0]);
  EXPECT_EQ(sub.num_vertices(), 3);
  EXPECT_EQ(sub.num_edges(), 2);
  EXPECT_TRUE(sub.has_edge(0, 1));
  EXPECT_TRUE(sub.has_edge(1, 2));
}

TEST(Graph, VariantParsing) {
  EXPECT_EQ(parse_variant("path"), Variant::path);
  EXPECT_EQ(parse_variant("cycle"), Variant::cycle);
  EXPECT_THROW(parse_variant("tour"), InputError);
  EXPECT_EQ(to_string(Variant::cycle), "cycle");
}

}  // namespace
}  // namespace udgpath
