#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mvc/oracle.hpp"
#include "mvc/predicates.hpp"
#include "test_support.hpp"

using namespace mvc;

namespace {

std::vector<double> combine(const std::vector<std::vector<double>>& gens, const std::vector<double>& lambda) {
  std::vector<double> out(gens.front().size(), 0.0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += lambda[i] * gens[i][j];
  return out;
}

SiteSystem with_s(const std::vector<Point>& pts, const std::vector<std::size_t>& s_idx) {
  std::vector<Site> sites;
  for (std::size_t i = 0; i < pts.size(); ++i) sites.push_back({"p" + std::to_string(i), pts[i]});
  std::vector<std::string> s;
  for (auto i : s_idx) s.push_back("p" + std::to_string(i));
  return SiteSystem(pts.front().dim(), sites, s);
}

}  // namespace

TEST(IsEmpty, EmptyExampleCertificate) {
  auto sys = mvc::testing::empty_example();
  auto r = is_empty(sys);
  ASSERT_TRUE(r.value);
  ASSERT_NE(r.multipliers(), nullptr);
  EXPECT_NEAR(r.multipliers()->multipliers[0], 0.5, 1e-12);
  EXPECT_NEAR(r.multipliers()->multipliers[1], 0.5, 1e-12);
  auto v = combine(lifted_vectors(sys), r.multipliers()->multipliers);
  EXPECT_NEAR(v[0], 0, 1e-12);
  EXPECT_NEAR(v[1], 0, 1e-12);
  EXPECT_NEAR(v[2], -1, 1e-12);
}

TEST(IsEmpty, EmptyExampleExact) {
  auto sys = mvc::testing::exact_empty_example();
  auto r = is_empty(sys);
  ASSERT_TRUE(r.value);
  const auto& m = r.multipliers()->multipliers;
  EXPECT_EQ(m[0], Rational(1, 2));
  EXPECT_EQ(m[1], Rational(1, 2));
  auto gens = lifted_vectors(sys);
  std::vector<Rational> sum(3, Rational(0));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) sum[j] += m[i] * gens[i][j];
  EXPECT_EQ(sum, (std::vector<Rational>{0, 0, -1}));
}

TEST(IsEmpty, SquareExampleHasWitness) {
  auto r = is_empty(mvc::testing::square_example());
  EXPECT_FALSE(r.value);
  ASSERT_NE(r.witness(), nullptr);
  EXPECT_NEAR((*r.witness())[0], 0.5, 1e-9);
  EXPECT_NEAR((*r.witness())[1], 0.5, 1e-9);
}

TEST(IsEmpty, ClassicCellIsNeverEmpty) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto sys = random_system(seed, 2 + seed % 3, 5, 1, 10);
    EXPECT_FALSE(is_empty(sys).value) << seed;
  }
}

TEST(IsBounded, SquareExample) {
  EXPECT_TRUE(is_bounded(mvc::testing::square_example()).value);
  EXPECT_TRUE(is_bounded(mvc::testing::exact_square_example()).value);
}

TEST(IsBounded, TwoSitesAreUnbounded) {
  SiteSystem sys(2, {{"s", Point{0, 0}}, {"t", Point{1, 0}}}, {"s"});
  auto r = is_bounded(sys);
  EXPECT_FALSE(r.value);
  EXPECT_FALSE(r.detail.empty());
}

TEST(IsBounded, ClassicInteriorSiteIsBounded) {
  SiteSystem sys(2, {{"s", Point{0, 0}}, {"a", Point{1, 0}}, {"b", Point{-1, 1}}, {"c", Point{-1, -1}}}, {"s"});
  EXPECT_TRUE(is_bounded(sys).value);
}

TEST(HasInterior, SquareExampleIsFlat) {
  auto sys = mvc::testing::square_example();
  auto r = has_interior(sys);
  EXPECT_FALSE(r.value);
  ASSERT_NE(r.multipliers(), nullptr);
  const auto& lambda = r.multipliers()->multipliers;
  double total = 0;
  for (double l : lambda) {
    EXPECT_GE(l, 0);
    total += l;
  }
  EXPECT_NEAR(total, 1, 1e-9);
  for (double c : combine(lifted_vectors(sys), lambda)) EXPECT_NEAR(c, 0, 1e-9);
}

TEST(HasInterior, RawConditionOnEmptyExample) {
  // the raw condition holds although the cell is empty
  EXPECT_TRUE(has_interior(mvc::testing::empty_example()).value);
}

TEST(HasInterior, GenericClassicCell) {
  SiteSystem sys(2, {{"s", Point{0, 0}}, {"t", Point{1, 0}}}, {"s"});
  EXPECT_TRUE(has_interior(sys).value);
}

TEST(CardinalityPrecheck, Threshold) {
  // planar: |T|^2 < 12 means |T| <= 3
  EXPECT_TRUE(cardinality_precheck(mvc::testing::empty_example()).has_value());
  EXPECT_FALSE(cardinality_precheck(mvc::testing::square_example()).has_value());
  auto sys3 = random_system(1, 3, 4, 2, 1);  // 16 < 16 fails
  EXPECT_FALSE(cardinality_precheck(sys3).has_value());
  auto sys4 = random_system(1, 4, 4, 2, 1);  // 16 < 20
  EXPECT_TRUE(cardinality_precheck(sys4).has_value());
}

TEST(BallWitness, SquareExample) {
  auto b = ball_witness(mvc::testing::square_example());
  ASSERT_TRUE(b.has_value());
  EXPECT_NEAR(b->center[0], 0.5, 1e-9);
  EXPECT_NEAR(b->radius, std::sqrt(0.5), 1e-9);
}

TEST(BallWitness, AbsentForEmptyCell) { EXPECT_FALSE(ball_witness(mvc::testing::empty_example()).has_value()); }

TEST(BallWitness, PostconditionOnRandomSystems) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto sys = random_system(seed, 2, 3 + seed % 4, 1 + seed % 2, 5);
    auto b = ball_witness(sys);
    if (!b) continue;
    for (const auto& s : sys.s_sites()) EXPECT_LE(std::sqrt(dist2(s.point, b->center)), b->radius + 1e-9);
    for (const auto& t : sys.t_sites()) EXPECT_GE(std::sqrt(dist2(t.point, b->center)), b->radius - 1e-9);
  }
}

TEST(SegmentsCross, Examples) {
  EXPECT_TRUE(segments_cross(Point{0, 0}, Point{1, 1}, Point{1, 0}, Point{0, 1}));
  EXPECT_FALSE(segments_cross(Point{-1, 0}, Point{1, 0}, Point{2, 1}, Point{2, -1}));
  EXPECT_FALSE(segments_cross(Point{0, 0}, Point{2, 0}, Point{1, 0}, Point{3, 0}));
  EXPECT_FALSE(segments_cross(Point{0, 0}, Point{2, 0}, Point{1, 0}, Point{1, 1}));  // touching at an endpoint
}

TEST(Contains, Examples) {
  HPolyhedron a(2, {Halfspace({1, 0}, 0)});
  HPolyhedron b(2, {Halfspace({1, 0}, -1)});
  HPolyhedron c(2, {Halfspace({0, 1}, 0)});
  EXPECT_TRUE(contains(a, a));
  EXPECT_TRUE(contains(a, b));
  EXPECT_FALSE(contains(b, a));
  EXPECT_FALSE(contains(a, c));
  HPolyhedron bad(2, {Halfspace({1, 0}, -1), Halfspace({-1, 0}, -1)});
  try {
    contains(a, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InfeasibleBase);
  }
}

TEST(SignedDepth, Signs) {
  EXPECT_LT(signed_depth(cell_hrep(mvc::testing::empty_example())), 0);
  EXPECT_NEAR(signed_depth(cell_hrep(mvc::testing::square_example())), 0, 1e-9);
  HPolyhedron box(2, {Halfspace({1, 0}, 1), Halfspace({-1, 0}, 1), Halfspace({0, 1}, 0.25), Halfspace({0, -1}, 0.25)});
  EXPECT_NEAR(signed_depth(box), 0.25, 1e-9);
}

// Hull vertices are exactly the sites whose farthest-point cell is nonempty.
TEST(Properties, ExtremePointsOwnNonemptyComplementCells) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 3 + trial % 5;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < m; ++i) pts.push_back(mvc::testing::random_point(rng, 2, 10));
    if (mvc::testing::min_relative_orientation(pts) < 1e-6) continue;
    auto hull = mvc::testing::hull_vertices(pts);
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < m; ++i)
        if (i != t) rest.push_back(i);
      const bool on_hull = std::find(hull.begin(), hull.end(), t) != hull.end();
      EXPECT_EQ(!is_empty(with_s(pts, rest)).value, on_hull) << trial << " " << t;
      EXPECT_FALSE(is_empty(with_s(pts, {t})).value);
    }
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(Properties, SiteOfTInsideHullOfSEmptiesTheCell) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> w(0.05, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t ns = 2 + trial % 3;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < ns; ++i) pts.push_back(mvc::testing::random_point(rng, 2, 10));
    std::vector<double> lam(ns);
    double total = 0;
    for (auto& l : lam) total += (l = w(rng));
    std::vector<double> inside(2, 0.0);
    for (std::size_t i = 0; i < ns; ++i)
      for (int j = 0; j < 2; ++j) inside[j] += lam[i] / total * pts[i][j];
    pts.emplace_back(inside);
    pts.push_back(mvc::testing::random_point(rng, 2, 10));
    std::vector<std::vector<double>> s_coords;
    std::vector<std::size_t> s_idx;
    for (std::size_t i = 0; i < ns; ++i) {
      s_idx.push_back(i);
      s_coords.push_back(pts[i].coords());
    }
    ASSERT_TRUE(in_convex_hull(inside, s_coords).has_value());
    EXPECT_TRUE(is_empty(with_s(pts, s_idx)).value) << trial;
  }
}

TEST(Properties, BoundedIffDiagonalsCross) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    auto sys = random_system(seed, 2, 4, 2, 1);
    std::vector<Point> p;
    for (const auto& s : sys.sites()) p.push_back(s.point);
    if (mvc::testing::min_relative_orientation(p) < 1e-7) continue;
    EXPECT_EQ(is_bounded(sys).value, segments_cross(p[0], p[1], p[2], p[3])) << seed;
    ++checked;
  }
  EXPECT_GT(checked, 2900);
}

TEST(Properties, FewSitesNeverNonemptyAndBounded) {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const std::size_t n = 2 + seed % 3;
    // largest |T| with |T|^2 < 4(n+1)
    std::size_t t = 1;
    while ((t + 1) * (t + 1) < 4 * (n + 1)) ++t;
    auto sys = random_system(seed, n, t, 1 + seed % (t - 1), 1);
    ASSERT_TRUE(cardinality_precheck(sys).has_value());
    EXPECT_FALSE(!is_empty(sys).value && is_bounded(sys).value) << seed;
    auto sys34 = random_system(seed + 100000, 2, 4, 3, 1);
    EXPECT_FALSE(!is_empty(sys34).value && is_bounded(sys34).value) << seed;
  }
}

TEST(Properties, ReplacingTheSiteBreaksContainment) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Point> p;
    for (int i = 0; i < 4; ++i) p.push_back(mvc::testing::random_point(rng, 2, 5));
    if (mvc::testing::min_relative_orientation(p) < 1e-6) continue;
    SiteSystem a(2, {{"t1", p[0]}, {"t2", p[1]}, {"s", p[2]}}, {"s"});
    SiteSystem b(2, {{"t1", p[0]}, {"t2", p[1]}, {"s", p[3]}}, {"s"});
    EXPECT_FALSE(contains(cell_hrep(b), cell_hrep(a))) << trial;
    ++checked;
  }
  EXPECT_GT(checked, 950);
}
