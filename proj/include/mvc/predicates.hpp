#ifndef MVC_PREDICATES_HPP
#define MVC_PREDICATES_HPP

/*! \file
    \brief Certified yes/no questions about a multipoint Voronoi cell.

All of them are phrased on the lifted vectors (t - s, |t|^2 - |s|^2), one per
pair s in S, t in T\S, or on their first n coordinates t - s:

  - empty     iff (0_n, -1) lies in the cone of the lifted vectors;
  - bounded   iff the vectors t - s positively span R^n;
  - interior  iff 0_{n+1} is outside the convex hull of the lifted vectors.

The interior condition is a Slater-type test and says nothing useful about an
empty cell; callers combine it with is_empty.
*/

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvc/core.hpp"
#include "mvc/lp.hpp"

namespace mvc {

template <class T>
using Certificate = std::variant<std::monostate, FarkasCertificate<T>, BasicPoint<T>>;

template <class T>
struct PredicateReport {
  bool value = false;
  Certificate<T> certificate;
  std::string method;
  std::string detail;

  const FarkasCertificate<T>* multipliers() const { return std::get_if<FarkasCertificate<T>>(&certificate); }
  const BasicPoint<T>* witness() const { return std::get_if<BasicPoint<T>>(&certificate); }
};

/// (t - s, |t|^2 - |s|^2) for every pair, in cell_hrep row order.
template <class T>
std::vector<std::vector<T>> lifted_vectors(const BasicSiteSystem<T>& sys) {
  std::vector<std::vector<T>> out;
  for (const auto& s : sys.s_sites()) {
    for (const auto& t : sys.t_sites()) {
      std::vector<T> v(sys.dim() + 1);
      for (std::size_t i = 0; i < sys.dim(); ++i) v[i] = t.point[i] - s.point[i];
      v[sys.dim()] = norm2(t.point) - norm2(s.point);
      out.push_back(std::move(v));
    }
  }
  return out;
}

template <class T>
std::vector<std::vector<T>> difference_vectors(const BasicSiteSystem<T>& sys) {
  auto lifted = lifted_vectors(sys);
  for (auto& v : lifted) v.pop_back();
  return lifted;
}

template <class T>
PredicateReport<T> is_empty(const BasicSiteSystem<T>& sys, Tolerances tols = {}) {
  std::vector<T> target(sys.dim() + 1, T(0));
  target.back() = T(-1);
  auto cone = in_cone(target, lifted_vectors(sys), tols);
  auto feas = solve_feasibility(cell_hrep(sys), tols);
  if (cone.has_value() == feas.feasible())
    throw Error(Errc::NumericallyIllConditioned, "cone test and H-representation feasibility disagree");
  PredicateReport<T> r;
  r.method = "cone characterization of empty cells";
  r.value = cone.has_value();
  if (r.value) {
    r.certificate = std::move(*cone);
  } else {
    r.certificate = std::move(*feas.witness);
  }
  return r;
}

/// Tests recession-cone triviality; for an empty cell the value is not meaningful.
template <class T>
PredicateReport<T> is_bounded(const BasicSiteSystem<T>& sys, Tolerances tols = {}) {
  const auto gens = difference_vectors(sys);
  PredicateReport<T> r;
  r.method = "positive spanning of t - s";
  r.value = true;
  for (std::size_t j = 0; j < sys.dim() && r.value; ++j) {
    for (int sign : {1, -1}) {
      std::vector<T> e(sys.dim(), T(0));
      e[j] = T(sign);
      if (!in_cone(e, gens, tols)) {
        r.value = false;
        r.detail = std::string(sign > 0 ? "+" : "-") + "e" + std::to_string(j + 1) + " not in cone";
        break;
      }
    }
  }
  return r;
}

/// Slater-type interior test; certificate is the convex combination when false.
template <class T>
PredicateReport<T> has_interior(const BasicSiteSystem<T>& sys, Tolerances tols = {}) {
  std::vector<T> zero(sys.dim() + 1, T(0));
  auto hull = in_convex_hull(zero, lifted_vectors(sys), tols);
  PredicateReport<T> r;
  r.method = "Slater condition via convex hull of lifted vectors";
  r.value = !hull.has_value();
  if (hull) r.certificate = FarkasCertificate<T>{std::move(*hull)};
  return r;
}

enum class CardinalityVerdict { EmptyOrUnbounded };

/// |T| < 2 sqrt(n+1) forces every cell to be empty or unbounded.
template <class T>
std::optional<CardinalityVerdict> cardinality_precheck(const BasicSiteSystem<T>& sys) {
  const std::size_t p = sys.sites().size();
  if (p * p < 4 * (sys.dim() + 1)) return CardinalityVerdict::EmptyOrUnbounded;
  return std::nullopt;
}

struct Ball {
  Point center;
  double radius = 0;
};

/// Closed ball containing S whose interior misses T\S, centred in the cell.
inline std::optional<Ball> ball_witness(const SiteSystem& sys, Tolerances tols = {}) {
  auto e = is_empty(sys, tols);
  if (e.value) return std::nullopt;
  const Point c = *e.witness();
  double r2 = 0;
  for (const auto& s : sys.s_sites()) r2 = std::max(r2, dist2(c, s.point));
  Ball b{c, std::sqrt(r2)};
  const double slack = 1e-9 * std::max(1.0, b.radius);
  for (const auto& t : sys.t_sites())
    if (std::sqrt(dist2(c, t.point)) < b.radius - slack)
      throw Error(Errc::NumericallyIllConditioned, "ball witness has a site of T\\S inside");
  return b;
}

/// True iff the open segments (s1,s2) and (t1,t2) cross in a single point.
inline bool segments_cross(const Point& s1, const Point& s2, const Point& t1, const Point& t2) {
  for (const auto* p : {&s1, &s2, &t1, &t2})
    if (p->dim() != 2) throw Error(Errc::DimensionMismatch, "segments_cross is planar");
  auto orient = [](const Point& a, const Point& b, const Point& c) {
    const double ux = b[0] - a[0], uy = b[1] - a[1], vx = c[0] - a[0], vy = c[1] - a[1];
    const double det = ux * vy - uy * vx;
    const double scale = std::hypot(ux, uy) * std::hypot(vx, vy);
    if (std::abs(det) <= 1e-12 * std::max(1.0, scale)) return 0;
    return det > 0 ? 1 : -1;
  };
  const int o1 = orient(s1, s2, t1), o2 = orient(s1, s2, t2);
  const int o3 = orient(t1, t2, s1), o4 = orient(t1, t2, s2);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

/// Whether every halfspace of outer is implied by inner's system.
template <class T>
bool contains(const BasicHPolyhedron<T>& outer, const BasicHPolyhedron<T>& inner, Tolerances tols = {}) {
  if (outer.dim() != inner.dim()) throw Error(Errc::DimensionMismatch, "containment across dimensions");
  if (!solve_feasibility(inner, tols).feasible())
    throw Error(Errc::InfeasibleBase, "containment of an infeasible polyhedron");
  for (const auto& h : outer.halfspaces())
    if (!implied(h, inner.halfspaces(), tols)) return false;
  return true;
}

/// Largest r with every unit-normalized row slack >= r (capped at `cap`).
/// Negative exactly when the polyhedron is empty, zero when it is flat.
inline double signed_depth(const HPolyhedron& p, double cap = 1.0, Tolerances tols = {}) {
  const std::size_t n = p.dim();
  std::vector<Halfspace> rows;
  for (const auto& h : p.halfspaces()) {
    const double len = std::sqrt(dot(h.normal(), h.normal()));
    std::vector<double> a(n + 1);
    for (std::size_t j = 0; j < n; ++j) a[j] = h.normal()[j] / len;
    a[n] = 1.0;
    rows.emplace_back(std::move(a), h.offset() / len);
  }
  std::vector<double> cap_row(n + 1, 0.0);
  cap_row[n] = 1.0;
  rows.emplace_back(cap_row, cap);
  auto r = maximize(cap_row, rows, tols);
  if (r.status != Optimum::Optimal) throw Error(Errc::NumericallyIllConditioned, "depth LP did not reach an optimum");
  return r.value;
}

}  // namespace mvc

#endif  // MVC_PREDICATES_HPP
