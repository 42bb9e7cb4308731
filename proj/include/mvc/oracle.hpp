#ifndef MVC_ORACLE_HPP
#define MVC_ORACLE_HPP

/*! \file
    \brief Brute-force checks against the distance definition of a cell.

Nothing here solves an LP: membership is decided by comparing squared
distances, so these routines can referee the LP-based modules.
*/

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mvc/cell_ops.hpp"
#include "mvc/core.hpp"

namespace mvc {

struct SampleGrid {
  Box bbox;
  std::size_t resolution = 2;
  std::uint64_t jitter_seed = 0;

  SampleGrid(Box box, std::size_t res, std::uint64_t seed) : bbox(std::move(box)), resolution(res), jitter_seed(seed) {
    if (resolution < 2) throw Error(Errc::PreconditionViolated, "grid resolution must be at least 2");
  }
};

struct AgreementReport {
  std::size_t samples = 0;
  std::size_t disagreements = 0;
  std::size_t skipped_boundary = 0;
};

namespace detail {

// Uniform in [0, 1) from the top 53 bits; the same on every platform.
inline double unit_draw(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// Lattice points of the grid, each moved by up to a quarter spacing per axis.
inline std::vector<Point> grid_points(const SampleGrid& g) {
  const std::size_t n = g.bbox.dim();
  std::mt19937_64 eng(g.jitter_seed);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= g.resolution;
  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double h = (g.bbox.hi[i] - g.bbox.lo[i]) / static_cast<double>(g.resolution - 1);
      double x = g.bbox.lo[i] + h * static_cast<double>(idx[i]) + (detail::unit_draw(eng) - 0.5) * 0.5 * h;
      c[i] = std::min(g.bbox.hi[i], std::max(g.bbox.lo[i], x));
    }
    out.emplace_back(std::move(c));
    for (std::size_t i = 0; i < n && ++idx[i] == g.resolution; ++i) idx[i] = 0;
  }
  return out;
}

/// Grid points inside the cell by the distance definition.
inline std::vector<Point> sample_cell(const SiteSystem& sys, const SampleGrid& grid) {
  if (grid.bbox.dim() != sys.dim()) throw Error(Errc::DimensionMismatch, "grid and sites differ in dimension");
  std::vector<Point> out;
  for (auto& x : grid_points(grid))
    if (membership(x, sys)) out.push_back(std::move(x));
  return out;
}

namespace detail {

// Smallest unit-normalized distance from x to a bisector of some (s, t) pair.
inline double bisector_clearance(const Point& x, const SiteSystem& sys) {
  const auto& sites = sys.sites();
  double best = INFINITY;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (!sys.in_s(i)) continue;
    for (std::size_t j = 0; j < sites.size(); ++j) {
      if (sys.in_s(j)) continue;
      const double len = std::sqrt(dist2(sites[i].point, sites[j].point));
      best = std::min(best, std::abs(dist2(sites[j].point, x) - dist2(sites[i].point, x)) / (2 * len));
    }
  }
  return best;
}

inline double hrep_clearance(const Point& x, const HPolyhedron& p) {
  double best = INFINITY;
  for (const auto& h : p.halfspaces()) best = std::min(best, std::abs(h.slack(x)) / std::sqrt(dot(h.normal(), h.normal())));
  return best;
}

}  // namespace detail

/// Distance-definition membership against hrep satisfaction on every grid point.
inline AgreementReport agree(const SiteSystem& sys, const HPolyhedron& hrep, const SampleGrid& grid) {
  if (grid.bbox.dim() != sys.dim() || hrep.dim() != sys.dim())
    throw Error(Errc::DimensionMismatch, "grid, sites and hrep differ in dimension");
  AgreementReport r;
  for (const auto& x : grid_points(grid)) {
    ++r.samples;
    if (detail::bisector_clearance(x, sys) < 1e-7 || detail::hrep_clearance(x, hrep) < 1e-7) {
      ++r.skipped_boundary;
      continue;
    }
    if (membership(x, sys) != hrep.contains(x)) ++r.disagreements;
  }
  return r;
}

/// Seeded sites uniform in [-spread, spread]^n; S is the first s_count labels p0, p1, ...
inline SiteSystem random_system(std::uint64_t seed, std::size_t n, std::size_t t_count, std::size_t s_count,
                                double spread) {
  if (n < 1) throw Error(Errc::DimensionMismatch, "dimension must be positive");
  if (s_count < 1 || s_count >= t_count) throw Error(Errc::PreconditionViolated, "need 1 <= s_count < t_count");
  if (!(spread > 0)) throw Error(Errc::PreconditionViolated, "spread must be positive");
  std::mt19937_64 eng(seed);
  const double min_d2 = 1e-6 * spread * spread;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    for (std::size_t k = 0; k < t_count; ++k) {
      std::vector<double> c(n);
      for (auto& v : c) v = spread * (2 * detail::unit_draw(eng) - 1);
      pts.emplace_back(std::move(c));
    }
    bool ok = true;
    for (std::size_t i = 0; i < t_count && ok; ++i)
      for (std::size_t j = i + 1; j < t_count && ok; ++j) ok = dist2(pts[i], pts[j]) >= min_d2;
    if (!ok) continue;
    std::vector<Site> sites;
    std::vector<std::string> s_labels;
    for (std::size_t k = 0; k < t_count; ++k) {
      sites.push_back({"p" + std::to_string(k), pts[k]});
      if (k < s_count) s_labels.push_back(sites.back().label);
    }
    return SiteSystem(n, std::move(sites), std::move(s_labels));
  }
  throw Error(Errc::DegenerateDraw, "could not draw well-separated sites");
}

struct TilingReport {
  std::size_t samples = 0;
  std::size_t uncovered = 0;
  std::size_t overlaps = 0;
  std::size_t skipped_boundary = 0;

  bool ok() const noexcept { return uncovered == 0 && overlaps == 0; }
};

/// Every grid point must lie in some nonempty cell, and in exactly one when
/// it is at least 1e-7 away from every cell boundary.
inline TilingReport tiling_check(const std::vector<DiagramCell>& cells, const SampleGrid& grid) {
  std::vector<HPolyhedron> unit;
  for (const auto& c : cells) {
    if (c.empty) continue;
    std::vector<Halfspace> rows;
    for (const auto& h : c.hrep.halfspaces()) rows.push_back(unit_halfspace(h));
    unit.emplace_back(c.hrep.dim(), std::move(rows));
  }
  TilingReport r;
  for (const auto& x : grid_points(grid)) {
    ++r.samples;
    std::size_t owners = 0;
    bool boundary = false;
    for (const auto& p : unit) {
      bool inside = true;
      for (const auto& h : p.halfspaces()) {
        const double s = h.slack(x);
        if (std::abs(s) < 1e-7) boundary = true;
        if (s < -1e-9) inside = false;
      }
      owners += inside;
    }
    if (owners == 0) ++r.uncovered;
    if (boundary) {
      ++r.skipped_boundary;
    } else if (owners > 1) {
      ++r.overlaps;
    }
  }
  return r;
}

}  // namespace mvc

#endif  // MVC_ORACLE_HPP
