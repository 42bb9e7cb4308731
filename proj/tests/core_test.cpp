#include <gtest/gtest.h>

#include <random>

#include "mvc/core.hpp"
#include "mvc/lp.hpp"
#include "test_support.hpp"

using namespace mvc;
using mvc::testing::empty_example;
using mvc::testing::square_example;

TEST(Bisector, NormalAndOffsetFromSites) {
  auto h = bisector_halfspace(Point{-1, 0}, Point{0, 0});
  EXPECT_EQ(h.normal(), (std::vector<double>{1, 0}));
  EXPECT_EQ(h.offset(), -0.5);

  auto g = bisector_halfspace(Point{0, 0}, Point{1, 1});
  EXPECT_EQ(g.normal(), (std::vector<double>{1, 1}));
  EXPECT_EQ(g.offset(), 1.0);
}

TEST(Bisector, Errors) {
  try {
    bisector_halfspace(Point{3}, Point{3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateSites);
  }
  try {
    bisector_halfspace(Point{3}, Point{3, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(Bisector, HalfspaceIsTheCloserSide) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    Point s = mvc::testing::random_point(rng, 3, 2), t = mvc::testing::random_point(rng, 3, 2);
    auto h = bisector_halfspace(s, t);
    for (int j = 0; j < 50; ++j) {
      Point x = mvc::testing::random_point(rng, 3, 4);
      double margin = dist2(x, t) - dist2(x, s);
      if (std::abs(margin) < 1e-9) continue;
      EXPECT_EQ(h.contains(x), margin >= 0);
    }
  }
}

TEST(CellHrep, EmptyExampleRows) {
  auto p = cell_hrep(empty_example());
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.halfspaces()[0], Halfspace({1, 0}, -0.5));
  EXPECT_EQ(p.halfspaces()[1], Halfspace({-1, 0}, -0.5));
  ASSERT_TRUE(p.provenance());
  EXPECT_EQ((*p.provenance())[0], std::make_pair(std::string("s1"), std::string("t")));
  EXPECT_EQ((*p.provenance())[1], std::make_pair(std::string("s2"), std::string("t")));
}

TEST(CellHrep, SquareExampleIsTheCentre) {
  auto p = cell_hrep(square_example());
  ASSERT_EQ(p.size(), 4u);
  EXPECT_TRUE(p.contains(Point{0.5, 0.5}));
  for (double dx : {-1e-6, 1e-6})
    for (double dy : {-1e-6, 0.0, 1e-6}) EXPECT_FALSE(p.contains(Point{0.5 + dx, 0.5 + dy}));
}

TEST(CellHrep, TwoSitesGiveOneRow) {
  SiteSystem sys(2, {{"a", Point{0, 0}}, {"b", Point{2, 0}}}, {"a"});
  EXPECT_EQ(cell_hrep(sys).size(), 1u);
}

TEST(CellHrep, RowCountIsProductOfPartSizes) {
  std::mt19937_64 rng(11);
  for (std::size_t tcount = 2; tcount <= 7; ++tcount) {
    for (std::size_t scount = 1; scount < tcount; ++scount) {
      std::vector<Site> sites;
      std::vector<std::string> s;
      for (std::size_t i = 0; i < tcount; ++i) {
        sites.push_back({"p" + std::to_string(i), mvc::testing::random_point(rng, 3, 1)});
        if (i < scount) s.push_back(sites.back().label);
      }
      EXPECT_EQ(cell_hrep(SiteSystem(3, sites, s)).size(), scount * (tcount - scount));
    }
  }
}

TEST(Membership, Examples) {
  EXPECT_TRUE(membership(Point{0.5, 0.5}, square_example()));
  EXPECT_FALSE(membership(Point{0, 0}, empty_example()));
  SiteSystem classic(2, {{"a", Point{0, 0}}, {"b", Point{1, 3}}, {"c", Point{-2, 1}}}, {"b"});
  EXPECT_TRUE(membership(Point{1, 3}, classic));
  EXPECT_THROW(membership(Point{1, 3, 0}, classic), Error);
}

TEST(Membership, AgreesWithHalfspaces) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int sys_i = 0; sys_i < 20; ++sys_i) {
    const std::size_t n = 2 + sys_i % 2, tcount = 3 + sys_i % 4, scount = 1 + sys_i % (tcount - 1);
    std::vector<Site> sites;
    std::vector<std::string> s;
    for (std::size_t i = 0; i < tcount; ++i) {
      sites.push_back({"p" + std::to_string(i), mvc::testing::random_point(rng, n, 1)});
      if (i < scount) s.push_back(sites.back().label);
    }
    SiteSystem sys(n, sites, s);
    auto p = cell_hrep(sys);
    for (int j = 0; j < 10000; ++j) {
      Point x = mvc::testing::random_point(rng, n, 2);
      bool near = false;
      for (const auto& h : p.halfspaces()) near |= std::abs(h.slack(x)) < 1e-12;
      if (near) continue;
      ++checked;
      ASSERT_EQ(membership(x, sys), p.contains(x));
    }
  }
  EXPECT_GT(checked, 190000);
}

TEST(SiteSystemInvariants, Rejections) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::ParseError;
  };
  EXPECT_EQ(code([] { SiteSystem(2, {{"a", Point{0, 0}}, {"b", Point{0, 0}}}, {"a"}); }), Errc::DegenerateSites);
  EXPECT_EQ(code([] { SiteSystem(2, {{"a", Point{0, 0}}, {"b", Point{1, 0}}}, {}); }), Errc::InvalidSiteSystem);
  EXPECT_EQ(code([] { SiteSystem(2, {{"a", Point{0, 0}}, {"b", Point{1, 0}}}, {"a", "b"}); }),
            Errc::InvalidSiteSystem);
  EXPECT_EQ(code([] { SiteSystem(2, {{"a", Point{0, 0}}, {"b", Point{1, 0}}}, {"c"}); }), Errc::InvalidSiteSystem);
  EXPECT_EQ(code([] { SiteSystem(2, {{"a", Point{0, 0}}, {"a", Point{1, 0}}}, {"a"}); }), Errc::InvalidSiteSystem);
  EXPECT_EQ(code([] { SiteSystem(2, {{"a", Point{0, 0}}, {"b", Point{1, 0, 0}}}, {"a"}); }),
            Errc::DimensionMismatch);
  EXPECT_EQ(code([] { Point{std::nan("")}; }), Errc::InvalidPoint);
  EXPECT_EQ(code([] { Halfspace({0, 0}, 1); }), Errc::InvalidHalfspace);
}

TEST(SiteSystemInvariants, NearDuplicatesAreFlagged) {
  SiteSystem close(1, {{"a", Point{0.0}}, {"b", Point{1e-10}}}, {"a"});
  EXPECT_TRUE(close.near_duplicate());
  EXPECT_FALSE(square_example().near_duplicate());
}

TEST(Transform, IdentityLeavesSitesUnchanged) {
  auto sys = square_example();
  auto out = transform(sys, Matrix{{1, 0}, {0, 1}}, Point{0, 0});
  for (std::size_t i = 0; i < sys.sites().size(); ++i) EXPECT_EQ(out.sites()[i].point, sys.sites()[i].point);
  EXPECT_EQ(out.s_labels(), sys.s_labels());
}

TEST(Transform, ShiftedEmptyCellStaysEmpty) {
  auto out = transform(empty_example(), Matrix{{1, 0}, {0, 1}}, Point{5, 5});
  EXPECT_FALSE(solve_feasibility(cell_hrep(out)).feasible());
}

TEST(Transform, RejectsNonOrthogonal) {
  try {
    transform(square_example(), Matrix{{1, 0.1}, {0, 1}}, Point{0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotOrthogonal);
  }
}

TEST(Transform, MembershipIsEquivariant) {
  std::mt19937_64 rng(99);
  int compared = 0;
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + k % 3;
    std::vector<Site> sites;
    for (int i = 0; i < 5; ++i) sites.push_back({"p" + std::to_string(i), mvc::testing::random_point(rng, n, 1)});
    SiteSystem sys(n, sites, {"p0", "p1"});
    Matrix q = mvc::testing::random_orthogonal(rng, n);
    Point c = mvc::testing::random_point(rng, n, 3);
    auto moved = transform(sys, q, c);
    auto p = cell_hrep(sys), pm = cell_hrep(moved);
    for (int j = 0; j < 500; ++j) {
      Point x = mvc::testing::random_point(rng, n, 2);
      std::vector<double> y(n, 0.0);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) y[r] += q[r][s] * x[s];
        y[r] += c[r];
      }
      Point qx(y);
      for (std::size_t r = 0; r < p.size(); ++r) {
        const auto& a = p.halfspaces()[r];
        const auto& b = pm.halfspaces()[r];
        EXPECT_NEAR(a.slack(x), b.slack(qx), 1e-9);
      }
      bool near = false;
      for (const auto& h : p.halfspaces()) near |= std::abs(h.slack(x)) < 1e-9;
      if (near) continue;
      ++compared;
      ASSERT_EQ(membership(x, sys), membership(qx, moved));
    }
  }
  EXPECT_GT(compared, 15000);
}

TEST(ExactMode, EmptyExampleRowsAreExact) {
  auto p = cell_hrep(mvc::testing::exact_empty_example());
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.halfspaces()[0].offset(), Rational(-1, 2));
  EXPECT_EQ(p.halfspaces()[1].normal()[0], Rational(-1));
}

TEST(ExactMode, ParseRational) {
  EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
  EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
  EXPECT_EQ(parse_rational("17"), Rational(17));
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
}
