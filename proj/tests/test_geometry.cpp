#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "support.hpp"
#include "udgpath/errors.hpp"
#include "udgpath/geometry.hpp"

namespace udgpath {
namespace {

DiskSet disks_of(std::vector<Point> pts) { return DiskSet{std::move(pts)}; }

TEST(BuildUdg, ThreePointsOneEdge) {
  const Graph g = build_udg(disks_of({{0, 0}, {1, 0}, {5, 0}}));
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(BuildUdg, SinglePoint) {
  const Graph g = build_udg(disks_of({{3.7, -2.1}}));
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(BuildUdg, TangentDisksAreAdjacentAndDuplicatesAreDistinct) {
  const Graph g = build_udg(disks_of({{0, 0}, {2, 0}, {2, 0}, {4.0000001, 0}}));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 3));
  EXPECT_EQ(g.num_edges(), 3);
}

TEST(BuildUdg, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(build_udg(DiskSet{}), InputError);
  try {
    build_udg(disks_of({{0, 0}, {1, std::numeric_limits<double>::quiet_NaN()}}));
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos);
  }
  EXPECT_THROW(build_udg(disks_of({{std::numeric_limits<double>::infinity(), 0}})), InputError);
}

TEST(BuildUdg, MatchesAllPairsCheckOnFiftyPoints) {
  std::mt19937_64 rng(50);
  const DiskSet d = testing::random_disks(rng, 50, 10.0);
  EXPECT_EQ(build_udg(d), build_udg_naive(d));
}

TEST(BuildUdg, PropertyMatchesNaiveUpTo500Points) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 500);
    const double box = 1.0 + static_cast<double>(rng() % 40);
    const DiskSet d = testing::random_disks(rng, n, box);
    ASSERT_EQ(build_udg(d), build_udg_naive(d)) << "trial " << trial;
  }
}

TEST(BuildUdg, NegativeAndShiftedCoordinates) {
  std::mt19937_64 rng(11);
  DiskSet d = testing::random_disks(rng, 120, 8.0);
  for (auto& p : d.points) {
    p.x -= 1e6;
    p.y -= 3.5;
  }
  EXPECT_EQ(build_udg(d), build_udg_naive(d));
}

TEST(CliqueGrid, SameCellExample) {
  const DiskSet d = disks_of({{0.5, 0.5}, {0.7, 0.9}});
  const Graph g = build_udg(d);
  const CliqueGrid rep = build_clique_grid(d, g);
  EXPECT_EQ(rep.cell_of[0], (Cell{1, 1}));
  EXPECT_EQ(rep.cell_of[1], (Cell{1, 1}));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(check_clique_grid(g, rep).has_value());
}

TEST(CliqueGrid, BoundaryDistanceTwo) {
  const DiskSet d = disks_of({{0, 0}, {2, 0}});
  const Graph g = build_udg(d);
  const CliqueGrid rep = build_clique_grid(d, g);
  EXPECT_EQ(rep.cell_of[0], (Cell{1, 1}));
  EXPECT_EQ(rep.cell_of[1], (Cell{3, 1}));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_EQ(rep.t, 3);
  EXPECT_EQ(chebyshev(rep.cell_of[0], rep.cell_of[1]), 2);
}

TEST(CliqueGrid, BothConditionsOnRandomInstances) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    const DiskSet d = testing::random_disks(rng, 50, 10.0);
    const Graph g = build_udg(d);
    const CliqueGrid rep = build_clique_grid(d, g);
    ASSERT_FALSE(check_clique_grid(g, rep).has_value()) << *check_clique_grid(g, rep);
    std::size_t total = 0;
    for (const auto& [c, members] : rep.cells) {
      total += members.size();
      for (Vertex v : members) EXPECT_EQ(rep.cell_of[static_cast<std::size_t>(v)], c);
    }
    EXPECT_EQ(total, 50U);
  }
}

TEST(CliqueGrid, CheckerCatchesBrokenMaps) {
  const DiskSet d = disks_of({{0, 0}, {5, 0}});
  const Graph g = build_udg(d);
  CliqueGrid rep = build_clique_grid(d, g);
  rep.cell_of[1] = rep.cell_of[0];
  rep.cells.clear();
  rep.cells[rep.cell_of[0]] = {0, 1};
  EXPECT_TRUE(check_clique_grid(g, rep).has_value());
}

TEST(Geometry, Deterministic) {
  std::mt19937_64 a(99);
  std::mt19937_64 b(99);
  const DiskSet d1 = testing::random_disks(a, 200, 12.0);
  const DiskSet d2 = testing::random_disks(b, 200, 12.0);
  const Graph g1 = build_udg(d1);
  const Graph g2 = build_udg(d2);
  EXPECT_EQ(g1, g2);
  EXPECT_EQ(build_clique_grid(d1, g1).cell_of, build_clique_grid(d2, g2).cell_of);
}

}  // namespace
}  // namespace udgpath
