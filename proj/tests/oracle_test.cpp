#include <gtest/gtest.h>

#include <cmath>

#include "mvc/oracle.hpp"
#include "mvc/predicates.hpp"
#include "test_support.hpp"

using namespace mvc;

TEST(GridPoints, CountAndBounds) {
  SampleGrid g(Box({-1, 0}, {1, 3}), 7, 2);
  auto pts = grid_points(g);
  ASSERT_EQ(pts.size(), 49u);
  for (const auto& p : pts) {
    EXPECT_GE(p[0], -1);
    EXPECT_LE(p[0], 1);
    EXPECT_GE(p[1], 0);
    EXPECT_LE(p[1], 3);
  }
  EXPECT_EQ(grid_points(g), pts);
  EXPECT_NE(grid_points(SampleGrid(Box({-1, 0}, {1, 3}), 7, 3)), pts);
}

TEST(GridPoints, Preconditions) {
  EXPECT_THROW(SampleGrid(Box({0, 0}, {1, 1}), 1, 0), Error);
  EXPECT_THROW(Box({0, 0}, {0, 1}), Error);
}

TEST(SampleCell, EmptyExample) {
  EXPECT_TRUE(sample_cell(mvc::testing::empty_example(), SampleGrid(Box({-3, -3}, {3, 3}), 150, 1)).empty());
}

TEST(SampleCell, SquareExampleHitsOnlyTheCentre) {
  auto pts = sample_cell(mvc::testing::square_example(), SampleGrid(Box({0, 0}, {1, 1}), 101, 1));
  EXPECT_LE(pts.size(), 1u);
  for (const auto& p : pts) EXPECT_LE(std::sqrt(dist2(p, Point{0.5, 0.5})), 1e-7);
}

TEST(SampleCell, ClassicBisectorHalvesTheGrid) {
  SiteSystem sys(2, {{"s", Point{-1, 0}}, {"t", Point{1, 0}}}, {"s"});
  SampleGrid grid(Box({-2, -2}, {2, 2}), 40, 9);
  auto inside = sample_cell(sys, grid);
  std::size_t left = 0;
  for (const auto& p : grid_points(grid)) left += p[0] < 0;
  EXPECT_EQ(inside.size(), left);
  for (const auto& p : inside) EXPECT_LT(p[0], 0);
}

TEST(Agree, IdentityHasNoDisagreements) {
  auto sys = mvc::testing::square_example();
  auto r = agree(sys, cell_hrep(sys), SampleGrid(Box({-1, -1}, {2, 2}), 100, 1));
  EXPECT_EQ(r.samples, 10000u);
  EXPECT_EQ(r.disagreements, 0u);
  EXPECT_LE(r.disagreements + r.skipped_boundary, r.samples);
}

TEST(Agree, PerturbedRowDisagrees) {
  // relaxing one row of a flat cell moves nothing off the boundary, so relax two
  auto sys = mvc::testing::square_example();
  std::vector<Halfspace> rows = cell_hrep(sys).halfspaces();
  for (int i : {0, 1}) rows[i] = Halfspace(rows[i].normal(), rows[i].offset() + 1);
  auto r = agree(sys, HPolyhedron(2, rows), SampleGrid(Box({-1, -1}, {2, 2}), 100, 1));
  EXPECT_GT(r.disagreements, 0u);
}

TEST(Agree, PerturbedRowOfGenericCellDisagrees) {
  SiteSystem sys(2, {{"s", Point{0, 0}}, {"a", Point{2, 0}}, {"b", Point{0, 2}}, {"c", Point{-2, -2}}}, {"s"});
  std::vector<Halfspace> rows = cell_hrep(sys).halfspaces();
  rows[0] = Halfspace(rows[0].normal(), rows[0].offset() + 1);
  auto r = agree(sys, HPolyhedron(2, rows), SampleGrid(Box({-4, -4}, {4, 4}), 100, 1));
  EXPECT_GT(r.disagreements, 0u);
}

TEST(Agree, FarAwayGrid) {
  auto sys = mvc::testing::square_example();
  auto r = agree(sys, cell_hrep(sys), SampleGrid(Box({100, 100}, {101, 101}), 20, 1));
  EXPECT_EQ(r.disagreements, 0u);
}

TEST(RandomSystem, Deterministic) {
  auto a = random_system(42, 2, 4, 2, 1);
  auto b = random_system(42, 2, 4, 2, 1);
  ASSERT_EQ(a.sites().size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(a.sites()[i].label, b.sites()[i].label);
    EXPECT_EQ(a.sites()[i].point, b.sites()[i].point);
  }
  EXPECT_EQ(a.s_labels(), (std::vector<std::string>{"p0", "p1"}));
  EXPECT_NE(random_system(43, 2, 4, 2, 1).sites()[0].point, a.sites()[0].point);
}

TEST(RandomSystem, Preconditions) {
  EXPECT_THROW(random_system(1, 2, 4, 4, 1), Error);
  EXPECT_THROW(random_system(1, 2, 4, 0, 1), Error);
}

TEST(RandomSystem, SeparatedAndInRange) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto sys = random_system(seed, 3, 6, 2, 2);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t k = 0; k < 3; ++k) EXPECT_LE(std::abs(sys.sites()[i].point[k]), 2);
      for (std::size_t j = i + 1; j < 6; ++j) EXPECT_GE(dist2(sys.sites()[i].point, sys.sites()[j].point), 4e-6);
    }
  }
}

TEST(Properties, HrepMatchesDistanceDefinition) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t t = 2 + seed % 5;
    auto sys = random_system(seed, 2, t, 1 + seed % (t - 1), 1);
    auto r = agree(sys, cell_hrep(sys), SampleGrid(Box({-2, -2}, {2, 2}), 60, seed));
    EXPECT_EQ(r.disagreements, 0u) << seed;
  }
}

TEST(Properties, EmptyCellsHaveNoSamples) {
  int empties = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto sys = random_system(seed, 2, 5, 2 + seed % 2, 1);
    if (!is_empty(sys).value) continue;
    ++empties;
    EXPECT_TRUE(sample_cell(sys, SampleGrid(Box({-10, -10}, {10, 10}), 80, seed)).empty()) << seed;
  }
  EXPECT_GT(empties, 10);
}
