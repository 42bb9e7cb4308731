#ifndef MVC_FACETS_HPP
#define MVC_FACETS_HPP

#include <cmath>
#include <vector>

#include "mvc/cell_ops.hpp"
#include "mvc/predicates.hpp"

namespace mvc {

/// True iff the bisector of the two sites of S misses the relative interior
/// of every edge of the planar cell. Touching an edge at a vertex is allowed.
inline bool facet_bisector_check(const SiteSystem& sys, Tolerances tols = {}) {
  if (sys.dim() != 2) throw Error(Errc::DimensionMismatch, "facet check is planar");
  const auto ss = sys.s_sites();
  if (ss.size() != 2) throw Error(Errc::PreconditionViolated, "facet check needs |S| = 2");
  if (!has_interior(sys, tols).value) throw Error(Errc::PreconditionViolated, "cell has empty interior");
  if (is_empty(sys, tols).value) return true;

  const Point& s1 = ss[0].point;
  const Point& s2 = ss[1].point;
  const double len = std::sqrt(dist2(s1, s2));
  const std::vector<double> a{(s1[0] - s2[0]) / len, (s1[1] - s2[1]) / len};
  const double c = 0.5 * (norm2(s1) - norm2(s2)) / len;
  const double scale = std::max({1.0, std::sqrt(norm2(s1)), std::sqrt(norm2(s2))});
  const double eps = 1e-9 * scale;
  auto f = [&](const Point& x) { return a[0] * x[0] + a[1] * x[1] - c; };
  auto g = [&](const Point& d) { return a[0] * d[0] + a[1] * d[1]; };

  const HPolyhedron red = remove_redundant(cell_hrep(sys), tols);
  const auto verts = vertices2d(red);
  const auto rays = detail::edge_rays(red.halfspaces());
  for (std::size_t i = 0; i < red.size(); ++i) {
    const Halfspace u = unit_halfspace(red.halfspaces()[i]);
    std::vector<Point> on;
    for (const auto& v : verts)
      if (std::abs(u.slack(v)) <= 1e-8 * scale) on.push_back(v);
    std::vector<Point> dirs;
    for (const auto& r : rays)
      if (r.first == i) dirs.push_back(r.second);

    if (on.size() >= 2) {
      const double f0 = f(on[0]), f1 = f(on[1]);
      if ((f0 > eps && f1 < -eps) || (f0 < -eps && f1 > eps)) return false;
      if (std::abs(f0) <= eps && std::abs(f1) <= eps) return false;
    } else if (on.size() == 1 && dirs.size() == 1) {
      const double f0 = f(on[0]), gd = g(dirs[0]);
      if (std::abs(gd) <= 1e-12) {
        if (std::abs(f0) <= eps) return false;
      } else if (f0 * gd < 0 && std::abs(f0) > eps) {
        return false;
      }
    } else if (on.empty() && !dirs.empty()) {
      // a whole line: only a parallel bisector can miss it
      if (std::abs(g(dirs[0])) > 1e-12) return false;
      if (std::abs(f(Point{u.normal()[0] * u.offset(), u.normal()[1] * u.offset()})) <= eps) return false;
    }
  }
  return true;
}

}  // namespace mvc

#endif  // MVC_FACETS_HPP
