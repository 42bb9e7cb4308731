#ifndef MVC_CELL_OPS_HPP
#define MVC_CELL_OPS_HPP

/*! \file
    \brief Planar post-processing of cell H-representations.

Redundancy removal, vertex enumeration, shape classification for cells cut
out by a handful of lines, the union decomposition of an order-k cell into
order-(k-1) pieces, and enumeration of all order-k cells of a site set.
*/

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvc/core.hpp"
#include "mvc/lp.hpp"
#include "mvc/predicates.hpp"

namespace mvc {

inline Halfspace unit_halfspace(const Halfspace& h) {
  const double len = std::sqrt(dot(h.normal(), h.normal()));
  std::vector<double> a = h.normal();
  for (auto& v : a) v /= len;
  return Halfspace(std::move(a), h.offset() / len);
}

/// Sub-list of rows with the same solution set; every dropped row is implied
/// by the kept ones (or the kept ones are already infeasible).
inline HPolyhedron remove_redundant(const HPolyhedron& p, Tolerances tols = {}) {
  const std::size_t m = p.size();
  std::vector<Halfspace> unit;
  unit.reserve(m);
  for (const auto& h : p.halfspaces()) unit.push_back(unit_halfspace(h));
  std::vector<bool> keep(m, true);

  // coincident rows collapse onto their first occurrence
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i && keep[i]; ++j) {
      if (!keep[j]) continue;
      double diff = std::abs(unit[i].offset() - unit[j].offset());
      for (std::size_t c = 0; c < p.dim(); ++c) diff = std::max(diff, std::abs(unit[i].normal()[c] - unit[j].normal()[c]));
      if (diff <= tols.feasibility) keep[i] = false;
    }
  }

  const bool feasible = solve_feasibility(HPolyhedron(p.dim(), unit), tols).feasible();
  for (std::size_t i = 0; i < m; ++i) {
    if (!keep[i]) continue;
    std::vector<Halfspace> rest;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i && keep[j]) rest.push_back(unit[j]);
    if (rest.empty()) continue;
    if (!feasible && !solve_feasibility(HPolyhedron(p.dim(), rest), tols).feasible()) {
      keep[i] = false;
      continue;
    }
    if (feasible && implied(unit[i], rest, tols)) keep[i] = false;
  }

  std::vector<Halfspace> rows;
  typename HPolyhedron::Provenance prov;
  for (std::size_t i = 0; i < m; ++i) {
    if (!keep[i]) continue;
    rows.push_back(p.halfspaces()[i]);
    if (p.provenance()) prov.push_back((*p.provenance())[i]);
  }
  if (p.provenance()) return HPolyhedron(p.dim(), std::move(rows), std::move(prov));
  return HPolyhedron(p.dim(), std::move(rows));
}

namespace detail {

inline void require_planar(const HPolyhedron& p) {
  if (p.dim() != 2) throw Error(Errc::DimensionMismatch, "planar operation on a " + std::to_string(p.dim()) + "-D polyhedron");
}

inline void sort_ccw(std::vector<Point>& pts) {
  if (pts.size() < 2) return;
  double cx = 0, cy = 0;
  for (const auto& q : pts) {
    cx += q[0];
    cy += q[1];
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
  });
}

}  // namespace detail

/// Vertices of a planar polyhedron, counterclockwise around their centroid.
inline std::vector<Point> vertices2d(const HPolyhedron& p) {
  detail::require_planar(p);
  if (p.size() > 64) throw Error(Errc::PreconditionViolated, "vertices2d supports at most 64 halfspaces");
  std::vector<Halfspace> unit;
  for (const auto& h : p.halfspaces()) unit.push_back(unit_halfspace(h));
  std::vector<Point> out;
  for (std::size_t i = 0; i < unit.size(); ++i) {
    for (std::size_t j = i + 1; j < unit.size(); ++j) {
      const auto& a = unit[i].normal();
      const auto& b = unit[j].normal();
      const double det = a[0] * b[1] - a[1] * b[0];
      if (std::abs(det) < 1e-12) continue;
      const double x = (unit[i].offset() * b[1] - a[1] * unit[j].offset()) / det;
      const double y = (a[0] * unit[j].offset() - unit[i].offset() * b[0]) / det;
      Point v{x, y};
      bool ok = std::all_of(unit.begin(), unit.end(), [&](const Halfspace& h) { return h.slack(v) >= -1e-9; });
      if (!ok) continue;
      bool dup = std::any_of(out.begin(), out.end(), [&](const Point& w) { return dist2(v, w) < 1e-16; });
      if (!dup) out.push_back(v);
    }
  }
  detail::sort_ccw(out);
  return out;
}

/// Scale-free concyclicity measure of four planar points: the signed distance of
/// one point from the circle through the other three, divided by that circle's
/// radius. The triple whose triangle has the largest smallest angle is used.
/// 0 for concyclic points, nullopt when three are collinear.
inline std::optional<double> concyclic_measure(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
  const Point* pts[4] = {&p1, &p2, &p3, &p4};
  for (const auto* q : pts)
    if (q->dim() != 2) throw Error(Errc::DimensionMismatch, "cyclic_test is planar");
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int c = b + 1; c < 4; ++c) {
        const double ux = (*pts[b])[0] - (*pts[a])[0], uy = (*pts[b])[1] - (*pts[a])[1];
        const double vx = (*pts[c])[0] - (*pts[a])[0], vy = (*pts[c])[1] - (*pts[a])[1];
        if (std::abs(ux * vy - uy * vx) <= 1e-12 * std::hypot(ux, uy) * std::hypot(vx, vy)) return std::nullopt;
      }
    }
  }
  double best_shape = -1, result = 0;
  for (int skip = 0; skip < 4; ++skip) {
    const Point* q[3];
    for (int i = 0, j = 0; i < 4; ++i)
      if (i != skip) q[j++] = pts[i];
    const double bx = (*q[1])[0] - (*q[0])[0], by = (*q[1])[1] - (*q[0])[1];
    const double cx = (*q[2])[0] - (*q[0])[0], cy = (*q[2])[1] - (*q[0])[1];
    const double d = 2 * (bx * cy - by * cx);
    const double ex = cx - bx, ey = cy - by;
    const double la = std::hypot(bx, by), lb = std::hypot(cx, cy), lc = std::hypot(ex, ey);
    // sine of the smallest angle, which sits opposite the shortest side
    const double shape = std::abs(d / 2) * std::min({la, lb, lc}) / (la * lb * lc);
    if (shape <= best_shape) continue;
    best_shape = shape;
    const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    const double ox = (cy * b2 - by * c2) / d, oy = (bx * c2 - cx * b2) / d;
    const double r = std::hypot(ox, oy);
    result = (std::hypot((*pts[skip])[0] - (*q[0])[0] - ox, (*pts[skip])[1] - (*q[0])[1] - oy) - r) / r;
  }
  return result;
}

/// True iff the four points lie on one circle.
inline bool cyclic_test(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
  auto m = concyclic_measure(p1, p2, p3, p4);
  return m && std::abs(*m) <= 1e-9;
}

enum class ShapeTag {
  Empty,
  Singleton,
  OneDimensional,
  Halfplane,
  Strip,
  Wedge,
  Triangle,
  BoundedQuadrilateral,
  UnboundedThreeSide,
  UnboundedQuadrilateral,
  OtherPolygon,
};

inline std::string_view to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::Empty: return "Empty";
    case ShapeTag::Singleton: return "Singleton";
    case ShapeTag::OneDimensional: return "OneDimensional";
    case ShapeTag::Halfplane: return "Halfplane";
    case ShapeTag::Strip: return "Strip";
    case ShapeTag::Wedge: return "Wedge";
    case ShapeTag::Triangle: return "Triangle";
    case ShapeTag::BoundedQuadrilateral: return "BoundedQuadrilateral";
    case ShapeTag::UnboundedThreeSide: return "UnboundedThreeSide";
    case ShapeTag::UnboundedQuadrilateral: return "UnboundedQuadrilateral";
    case ShapeTag::OtherPolygon: return "OtherPolygon";
  }
  return "Unknown";
}

struct CellShape {
  ShapeTag tag = ShapeTag::Empty;
  std::vector<Point> vertices;
  /// Unit directions of the unbounded edges, one per (edge, direction).
  std::vector<Point> rays;
  std::optional<bool> cyclic;                    // BoundedQuadrilateral
  std::optional<bool> parallel_unbounded_sides;  // UnboundedThreeSide, UnboundedQuadrilateral
  bool numerically_ambiguous = false;
  std::optional<HPolyhedron> reduced;
};

namespace detail {

inline bool positively_spans_plane(const std::vector<Halfspace>& rows, Tolerances tols) {
  std::vector<std::vector<double>> normals;
  for (const auto& h : rows) normals.push_back(unit_halfspace(h).normal());
  for (auto e : {std::vector<double>{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
    if (!in_cone(e, normals, tols)) return false;
  return true;
}

// For each row, the directions along its boundary line that stay inside the
// recession cone; these are the unbounded edges of the polyhedron.
inline std::vector<std::pair<std::size_t, Point>> edge_rays(const std::vector<Halfspace>& rows) {
  std::vector<Halfspace> unit;
  for (const auto& h : rows) unit.push_back(unit_halfspace(h));
  std::vector<std::pair<std::size_t, Point>> out;
  for (std::size_t i = 0; i < unit.size(); ++i) {
    const auto& a = unit[i].normal();
    for (double sgn : {1.0, -1.0}) {
      Point d{-sgn * a[1], sgn * a[0]};
      bool recedes = std::all_of(unit.begin(), unit.end(), [&](const Halfspace& h) {
        return h.normal()[0] * d[0] + h.normal()[1] * d[1] <= 1e-9;
      });
      if (recedes) out.emplace_back(i, d);
    }
  }
  return out;
}

inline double angle_between(const Point& a, const Point& b) {
  const double c = a[0] * b[0] + a[1] * b[1], s = a[0] * b[1] - a[1] * b[0];
  return std::abs(std::atan2(s, c));
}

inline CellShape classify_nonempty(const HPolyhedron& p, Tolerances tols) {
  CellShape shape;
  const bool bounded = positively_spans_plane(p.halfspaces(), tols);
  const double depth = signed_depth(p, 1.0, tols);

  if (depth <= tols.feasibility) {
    shape.vertices = vertices2d(p);
    if (bounded && shape.vertices.size() == 1) {
      shape.tag = ShapeTag::Singleton;
    } else {
      shape.tag = ShapeTag::OneDimensional;
      for (auto& [row, d] : edge_rays(p.halfspaces())) {
        bool dup = std::any_of(shape.rays.begin(), shape.rays.end(),
                               [&](const Point& r) { return angle_between(r, d) < 1e-9; });
        if (!dup) shape.rays.push_back(d);
      }
    }
    return shape;
  }

  HPolyhedron red = remove_redundant(p, tols);
  const std::size_t k = red.size();
  shape.vertices = vertices2d(red);
  auto rays = edge_rays(red.halfspaces());
  for (const auto& r : rays) shape.rays.push_back(r.second);

  auto parallel_rays = [&]() {
    // unbounded edges are the rows contributing exactly one ray
    std::vector<Point> edge_dirs;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Point> mine;
      for (const auto& r : rays)
        if (r.first == i) mine.push_back(r.second);
      if (mine.size() == 1) edge_dirs.push_back(mine.front());
    }
    return edge_dirs.size() == 2 && angle_between(edge_dirs[0], edge_dirs[1]) < 1e-9;
  };

  if (bounded) {
    if (k == 3) {
      shape.tag = ShapeTag::Triangle;
    } else if (k == 4 && shape.vertices.size() == 4) {
      shape.tag = ShapeTag::BoundedQuadrilateral;
      const auto& v = shape.vertices;
      auto m = concyclic_measure(v[0], v[1], v[2], v[3]);
      shape.cyclic = m && std::abs(*m) <= 1e-9;
      shape.numerically_ambiguous = m && std::abs(*m) <= 1e-6;
    } else {
      shape.tag = ShapeTag::OtherPolygon;
    }
  } else if (k == 1) {
    shape.tag = ShapeTag::Halfplane;
  } else if (k == 2) {
    const auto a = unit_halfspace(red.halfspaces()[0]).normal();
    const auto b = unit_halfspace(red.halfspaces()[1]).normal();
    shape.tag = a[0] * b[0] + a[1] * b[1] < -1 + 1e-12 ? ShapeTag::Strip : ShapeTag::Wedge;
  } else if (k == 3) {
    shape.tag = ShapeTag::UnboundedThreeSide;
    shape.parallel_unbounded_sides = parallel_rays();
  } else if (k == 4) {
    shape.tag = ShapeTag::UnboundedQuadrilateral;
    shape.parallel_unbounded_sides = parallel_rays();
  } else {
    shape.tag = ShapeTag::OtherPolygon;
  }
  shape.reduced = std::move(red);
  return shape;
}

}  // namespace detail

/// Shape of an arbitrary planar H-representation.
inline CellShape classify_hrep2d(const HPolyhedron& p, Tolerances tols = {}) {
  detail::require_planar(p);
  if (!solve_feasibility(p, tols).feasible()) return CellShape{};
  return detail::classify_nonempty(p, tols);
}

/// Shape of the planar cell of a site system.
inline CellShape classify2d(const SiteSystem& sys, Tolerances tols = {}) {
  if (sys.dim() != 2) throw Error(Errc::DimensionMismatch, "classify2d needs planar sites");
  if (is_empty(sys, tols).value) return CellShape{};
  return detail::classify_nonempty(cell_hrep(sys), tols);
}

struct UnionPiece {
  std::string label;
  SiteSystem rest;     // T\{s} with S\{s}
  SiteSystem closest;  // S with {s}
};

/// One piece per s in S; the cell is the union over s of the intersections
/// of the two piece cells.
inline std::vector<UnionPiece> union_decompose(const SiteSystem& sys) {
  const auto ss = sys.s_sites();
  if (ss.size() < 2) throw Error(Errc::PreconditionViolated, "union decomposition needs |S| >= 2");
  std::vector<UnionPiece> out;
  for (const auto& s : ss) {
    std::vector<Site> rest_sites;
    std::vector<std::string> rest_s;
    for (std::size_t i = 0; i < sys.sites().size(); ++i) {
      const auto& site = sys.sites()[i];
      if (site.label == s.label) continue;
      rest_sites.push_back(site);
      if (sys.in_s(i)) rest_s.push_back(site.label);
    }
    out.push_back({s.label, SiteSystem(sys.dim(), std::move(rest_sites), std::move(rest_s)),
                   SiteSystem(sys.dim(), ss, {s.label})});
  }
  return out;
}

struct DiagramCell {
  std::vector<std::string> subset;
  HPolyhedron hrep;
  bool empty = false;
  /// Cell clipped to the diagram box, counterclockwise; empty for empty cells.
  std::vector<Point> clipped;
};

inline std::vector<Halfspace> box_halfspaces(const Box& box) {
  std::vector<Halfspace> rows;
  for (std::size_t i = 0; i < box.dim(); ++i) {
    std::vector<double> e(box.dim(), 0.0);
    e[i] = 1;
    rows.emplace_back(e, box.hi[i]);
    e[i] = -1;
    rows.emplace_back(e, -box.lo[i]);
  }
  return rows;
}

/// Every order-k cell of the planar sites, one per k-subset in lexicographic
/// order of sorted labels.
inline std::vector<DiagramCell> diagram(const std::vector<Site>& sites, std::size_t k, const Box& bbox,
                                        Tolerances tols = {}) {
  if (k < 1 || k >= sites.size()) throw Error(Errc::PreconditionViolated, "diagram order must satisfy 1 <= k < |T|");
  if (sites.size() > 12) throw Error(Errc::PreconditionViolated, "diagram supports at most 12 sites");
  if (bbox.dim() != 2) throw Error(Errc::DimensionMismatch, "diagram box must be planar");
  std::vector<std::string> labels;
  for (const auto& s : sites) labels.push_back(s.label);
  std::sort(labels.begin(), labels.end());

  std::vector<DiagramCell> out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = labels.size();
  while (true) {
    std::vector<std::string> subset;
    for (auto i : idx) subset.push_back(labels[i]);
    SiteSystem sys(2, sites, subset);
    DiagramCell cell{subset, cell_hrep(sys), is_empty(sys, tols).value, {}};
    if (!cell.empty) cell.clipped = vertices2d(cell.hrep.with(box_halfspaces(bbox)));
    out.push_back(std::move(cell));

    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace mvc

#endif  // MVC_CELL_OPS_HPP
