#ifndef MVC_CONSTRUCTIONS_HPP
#define MVC_CONSTRUCTIONS_HPP

/*! \file
    \brief Sites realizing a prescribed planar cell.

The closed-form constructions (singleton, halfspace, strip, wedge) follow the
explicit site formulas. The quadrilateral-type constructions reduce to one
problem: find t1 with s1 = R0 t1, t2 = R1 s1, s2 = R2 t2 and t1 = R3 s2 for
reflections R0..R3 in four prescribed lines. t1 is then the fixed point of
R3 R2 R1 R0, a rotation whose fixed point is unique unless the quadrilateral
is cyclic. Every output is checked by classifying the produced cell.
*/

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mvc/cell_ops.hpp"
#include "mvc/core.hpp"
#include "mvc/predicates.hpp"

namespace mvc {

enum class ImpossibilityKind { Triangle, CyclicQuadrilateral, OneDimensional, ParallelSidedTwoVertexUnbounded };

struct ImpossibilityReason {
  ImpossibilityKind kind;
  std::string citation;
};

inline ImpossibilityReason impossibility(ImpossibilityKind k) {
  switch (k) {
    case ImpossibilityKind::Triangle:
      return {k, "a cell with |S| = 2, |T| = 4 is not a triangle"};
    case ImpossibilityKind::CyclicQuadrilateral:
      return {k, "a cell with |S| = 2, |T| = 4 is not a cyclic quadrilateral"};
    case ImpossibilityKind::OneDimensional:
      return {k, "a cell with |S| = 2, |T| = 4 is not one-dimensional"};
    case ImpossibilityKind::ParallelSidedTwoVertexUnbounded:
      return {k, "a cell with |S| = 2, |T| = 4 is not an unbounded polygon with parallel sides and just two vertices"};
  }
  return {k, ""};
}

inline std::string_view to_string(ImpossibilityKind k) {
  switch (k) {
    case ImpossibilityKind::Triangle: return "Triangle";
    case ImpossibilityKind::CyclicQuadrilateral: return "CyclicQuadrilateral";
    case ImpossibilityKind::OneDimensional: return "OneDimensional";
    case ImpossibilityKind::ParallelSidedTwoVertexUnbounded: return "ParallelSidedTwoVertexUnbounded";
  }
  return "Unknown";
}

class ImpossibleShape : public Error {
 public:
  ImpossibleShape(Errc code, ImpossibilityReason reason) : Error(code, reason.citation), reason_(std::move(reason)) {}
  const ImpossibilityReason& reason() const noexcept { return reason_; }

 private:
  ImpossibilityReason reason_;
};

struct SingletonTarget {
  Point c;
};
struct HalfspaceTarget {
  std::vector<double> d;
  double gamma = 0;
  int sigma = 1, tau = 2;
};
struct StripTarget {
  std::vector<double> d;
  double alpha = 0, beta = 1;
};
struct WedgeTarget {
  std::vector<double> v1, v2;
  double b1 = 0, b2 = 0;
};
/// Four vertices in boundary order (either orientation).
struct NonCyclicQuadTarget {
  std::array<Point, 4> vertices;
};
/// Vertices v1, v2 with the unbounded sides leaving v1 along r1 and v2 along r2.
struct UnboundedThreeTarget {
  Point v1, v2, r1, r2;
};
/// Interior vertex a, b and c on the two parallel sides, both leaving along r.
struct UnboundedQuadParallelTarget {
  Point a, b, c, r;
};
/// Boundary chain c, a, d with rays r1 leaving c and r2 leaving d.
struct UnboundedQuadGeneralTarget {
  Point c, a, d, r1, r2;
};
struct EmptyTarget {};

using TargetShape = std::variant<EmptyTarget, SingletonTarget, HalfspaceTarget, StripTarget, WedgeTarget,
                                 NonCyclicQuadTarget, UnboundedThreeTarget, UnboundedQuadParallelTarget,
                                 UnboundedQuadGeneralTarget>;

using ConstructionResult = std::variant<SiteSystem, ImpossibilityReason>;

namespace detail::plane {

inline Point vec(double x, double y) { return Point{x, y}; }
inline double cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }
inline double dot2(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double length(const Point& a) { return std::hypot(a[0], a[1]); }
inline Point unit(const Point& a) {
  const double l = length(a);
  if (!(l > 0)) throw Error(Errc::PreconditionViolated, "zero direction");
  return vec(a[0] / l, a[1] / l);
}
inline Point rotate(const Point& a, double th) {
  const double c = std::cos(th), s = std::sin(th);
  return vec(c * a[0] - s * a[1], s * a[0] + c * a[1]);
}
// unsigned angle between directions, in [0, pi]
inline double angle(const Point& a, const Point& b) { return std::abs(std::atan2(cross(a, b), dot2(a, b))); }
inline bool parallel(const Point& a, const Point& b, double tol) {
  const double th = angle(a, b);
  return th < tol || th > std::numbers::pi - tol;
}

struct Line {
  Point p, d;  // d is a unit vector
};
inline Line through(const Point& p, const Point& q) { return {p, unit(q - p)}; }

// x -> q x + v
struct Affine {
  double q[2][2];
  double v[2];
  Point operator()(const Point& x) const {
    return vec(q[0][0] * x[0] + q[0][1] * x[1] + v[0], q[1][0] * x[0] + q[1][1] * x[1] + v[1]);
  }
};
inline Affine reflection(const Line& l) {
  Affine a{};
  const double dx = l.d[0], dy = l.d[1];
  a.q[0][0] = 2 * dx * dx - 1;
  a.q[0][1] = 2 * dx * dy;
  a.q[1][0] = 2 * dx * dy;
  a.q[1][1] = 2 * dy * dy - 1;
  a.v[0] = l.p[0] - (a.q[0][0] * l.p[0] + a.q[0][1] * l.p[1]);
  a.v[1] = l.p[1] - (a.q[1][0] * l.p[0] + a.q[1][1] * l.p[1]);
  return a;
}
inline Affine compose(const Affine& f, const Affine& g) {
  Affine h{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) h.q[i][j] = f.q[i][0] * g.q[0][j] + f.q[i][1] * g.q[1][j];
    h.v[i] = f.q[i][0] * g.v[0] + f.q[i][1] * g.v[1] + f.v[i];
  }
  return h;
}
inline std::optional<Point> fixed_point(const Affine& f) {
  const double m00 = 1 - f.q[0][0], m01 = -f.q[0][1], m10 = -f.q[1][0], m11 = 1 - f.q[1][1];
  const double det = m00 * m11 - m01 * m10;
  if (std::abs(det) < 1e-12) return std::nullopt;
  return vec((f.v[0] * m11 - m01 * f.v[1]) / det, (m00 * f.v[1] - m10 * f.v[0]) / det);
}
inline Point reflect(const Point& x, const Line& l) { return reflection(l)(x); }
inline std::optional<Point> intersect(const Line& a, const Line& b) {
  const double det = cross(a.d, b.d);
  if (std::abs(det) < 1e-12) return std::nullopt;
  const double t = cross(b.p - a.p, b.d) / det;
  return a.p + t * a.d;
}

// Boundary chain: in from infinity along `first` reversed, through pts, out along `last`.
// Bounded polygons pass no rays.
struct Chain {
  std::vector<Point> pts;
  std::optional<Point> first, last;
};
inline std::vector<Point> chain_edges(const Chain& c) {
  std::vector<Point> e;
  if (c.first) e.push_back(-1.0 * *c.first);
  for (std::size_t i = 1; i < c.pts.size(); ++i) e.push_back(c.pts[i] - c.pts[i - 1]);
  if (c.last) {
    e.push_back(*c.last);
  } else {
    e.push_back(c.pts.front() - c.pts.back());
  }
  return e;
}
// +1 / -1 for a strictly convex chain, 0 otherwise.
inline int orientation(const Chain& c) {
  const auto e = chain_edges(c);
  const bool closed = !c.first;
  int sign = 0;
  double turning = 0;
  const std::size_t turns = closed ? e.size() : e.size() - 1;
  for (std::size_t i = 0; i < turns; ++i) {
    const Point& a = e[i];
    const Point& b = e[(i + 1) % e.size()];
    const double x = cross(a, b) / (length(a) * length(b));
    if (std::abs(x) < 1e-12) return 0;
    const int s = x > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return 0;
    sign = s;
    turning += angle(a, b);
  }
  const double total = closed ? 2 * std::numbers::pi : std::numbers::pi;
  if (turning > total + 1e-9) return 0;
  return sign;
}
// Rows with the polygon on their inner side.
inline HPolyhedron chain_hrep(const Chain& c, int orient) {
  const auto e = chain_edges(c);
  std::vector<Halfspace> rows;
  auto add = [&](const Point& p, const Point& dir) {
    const Point u = unit(dir);
    // polygon lies left of the traversal for counterclockwise orientation
    std::vector<double> a{orient * u[1], -orient * u[0]};
    rows.emplace_back(a, a[0] * p[0] + a[1] * p[1]);
  };
  std::size_t k = 0;
  if (c.first) add(c.pts.front(), e[k++]);
  for (std::size_t i = 1; i < c.pts.size(); ++i) add(c.pts[i - 1], e[k++]);
  add(c.pts.back(), e[k]);
  return HPolyhedron(2, std::move(rows));
}
// Interior angle at pts[i] of a strictly convex chain.
inline double interior_angle(const Chain& c, std::size_t i) {
  const auto e = chain_edges(c);
  const std::size_t in = c.first ? i : (i + e.size() - 1) % e.size();
  const std::size_t out = c.first ? i + 1 : i;
  return std::numbers::pi - angle(e[in], e[out]);
}

inline SiteSystem four_sites(const Point& s1, const Point& s2, const Point& t1, const Point& t2) {
  return SiteSystem(2, {{"s1", s1}, {"s2", s2}, {"t1", t1}, {"t2", t2}}, {"s1", "s2"});
}

// The produced cell has the expected tag, the same vertices, and the same point set.
inline bool realizes(const SiteSystem& sys, const HPolyhedron& target, ShapeTag tag, const std::vector<Point>& verts) {
  try {
    const CellShape shape = classify2d(sys);
    if (shape.tag != tag || shape.vertices.size() != verts.size()) return false;
    for (const auto& v : verts) {
      bool hit = false;
      for (const auto& w : shape.vertices) hit = hit || std::sqrt(dist2(v, w)) <= 1e-7;
      if (!hit) return false;
    }
    const HPolyhedron got = shape.reduced ? *shape.reduced : cell_hrep(sys);
    return contains(target, got) && contains(got, target);
  } catch (const Error&) {
    return false;
  }
}

// Tries the 8 dihedral relabelings of four lines in cyclic order. `vertex_angles`
// (optional) holds interior angles at L0^L1, L1^L2, L2^L3, L3^L0; relabelings with
// a sum of opposite angles below pi are tried first.
inline std::optional<SiteSystem> four_line_sites(const std::array<Line, 4>& lines, const HPolyhedron& target,
                                                 ShapeTag tag, const std::vector<Point>& verts,
                                                 const std::optional<std::array<double, 4>>& vertex_angles) {
  struct Labeling {
    std::array<int, 4> idx;
    bool preferred;
  };
  std::vector<Labeling> order;
  for (int flip = 0; flip < 2; ++flip) {
    for (int r = 0; r < 4; ++r) {
      std::array<int, 4> idx{};
      for (int k = 0; k < 4; ++k) idx[k] = flip ? ((r - k) % 4 + 4) % 4 : (r + k) % 4;
      bool pref = false;
      if (vertex_angles) {
        // vertex between lines i and i+1 (cyclic) has index i
        auto vertex_of = [](int i, int j) { return ((j - i + 4) % 4 == 1) ? i : j; };
        const double a = (*vertex_angles)[vertex_of(idx[0], idx[1])];
        const double b = (*vertex_angles)[vertex_of(idx[2], idx[3])];
        pref = a + b < std::numbers::pi - 1e-6;
      }
      order.push_back({idx, pref});
    }
  }
  std::stable_partition(order.begin(), order.end(), [](const Labeling& l) { return l.preferred; });

  for (const auto& lab : order) {
    const Affine r0 = reflection(lines[lab.idx[0]]), r1 = reflection(lines[lab.idx[1]]);
    const Affine r2 = reflection(lines[lab.idx[2]]), r3 = reflection(lines[lab.idx[3]]);
    const auto t1 = fixed_point(compose(r3, compose(r2, compose(r1, r0))));
    if (!t1) continue;
    const Point s1 = r0(*t1), s2 = r3(*t1), t2 = r1(s1);
    try {
      SiteSystem sys = four_sites(s1, s2, *t1, t2);
      if (realizes(sys, target, tag, verts)) return sys;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

inline std::vector<double> checked_unit(const std::vector<double>& d, const char* what) {
  double n2 = 0;
  for (double v : d) n2 += v * v;
  if (d.empty() || std::abs(std::sqrt(n2) - 1) > 1e-12)
    throw Error(Errc::PreconditionViolated, std::string(what) + " must be a unit vector");
  return d;
}

inline Point along(const std::vector<double>& d, double t) {
  std::vector<double> c(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) c[i] = t * d[i];
  return Point(std::move(c));
}

}  // namespace detail::plane

/// Sites at the corners of the square of half-width 1/2 centred at c, S on a diagonal.
inline SiteSystem construct_singleton(const Point& c) {
  if (c.dim() != 2) throw Error(Errc::DimensionMismatch, "singleton construction is planar");
  const double h = 0.5;
  return SiteSystem(2,
                    {{"s1", c + Point{-h, -h}}, {"s2", c + Point{h, h}}, {"t1", c + Point{h, -h}},
                     {"t2", c + Point{-h, h}}},
                    {"s1", "s2"});
}

/// Sites on the line through gamma d realizing {x : <d,x> <= gamma} with |S| = sigma, |T| = tau.
inline SiteSystem construct_halfspace(const std::vector<double>& d, double gamma, int sigma, int tau) {
  using namespace detail::plane;
  checked_unit(d, "halfspace normal");
  if (sigma < 1 || tau <= sigma) throw Error(Errc::PreconditionViolated, "need 1 <= sigma < tau");
  const int m = sigma - 1, p = tau - sigma - 1;
  const Point x0 = along(d, gamma);
  std::vector<Site> sites;
  std::vector<std::string> s_labels;
  sites.push_back({"s0", x0 - along(d, 1.0)});
  s_labels.push_back("s0");
  for (int i = 1; i <= m; ++i) {
    sites.push_back({"s" + std::to_string(i), x0 - along(d, double(i) / (m + 1))});
    s_labels.push_back(sites.back().label);
  }
  sites.push_back({"t0", x0 + along(d, 1.0)});
  for (int j = 1; j <= p; ++j) sites.push_back({"t" + std::to_string(j), x0 + along(d, 1.0 + j)});
  return SiteSystem(d.size(), std::move(sites), std::move(s_labels));
}

/// Four collinear sites realizing {x : alpha <= <d,x> <= beta}.
inline SiteSystem construct_strip(const std::vector<double>& d, double alpha, double beta) {
  using namespace detail::plane;
  checked_unit(d, "strip normal");
  if (!(beta - alpha >= 1e-12)) throw Error(Errc::DegenerateStrip, "strip needs alpha < beta");
  return SiteSystem(d.size(),
                    {{"s1", along(d, (3 * alpha + beta) / 4)},
                     {"s2", along(d, (alpha + beta) / 2)},
                     {"t1", along(d, (3 * alpha - beta) / 2)},
                     {"t2", along(d, (7 * beta - 3 * alpha) / 4)}},
                    {"s1", "s2"});
}

/// Four sites realizing {x : <v1,x> <= b1, <v2,x> <= b2}.
inline SiteSystem construct_wedge(const std::vector<double>& v1, const std::vector<double>& v2, double b1, double b2) {
  using namespace detail::plane;
  checked_unit(v1, "wedge normal");
  checked_unit(v2, "wedge normal");
  if (v1.size() != v2.size()) throw Error(Errc::DimensionMismatch, "wedge normals differ in dimension");
  const std::size_t n = v1.size();
  double beta = 0;
  for (std::size_t i = 0; i < n; ++i) beta += v1[i] * v2[i];
  const double det = 1 - beta * beta;
  if (std::abs(det) < 1e-10) throw Error(Errc::ParallelNormals, "wedge normals are parallel");
  // apex in span{v1, v2}
  const double c1 = (b1 - beta * b2) / det, c2 = (b2 - beta * b1) / det;
  std::vector<double> apex(n);
  for (std::size_t i = 0; i < n; ++i) apex[i] = c1 * v1[i] + c2 * v2[i];
  const Point x(apex);
  auto combo = [&](double a, const std::vector<double>& p, double b, const std::vector<double>& q) {
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a * p[i] + b * q[i];
    return x + Point(std::move(c));
  };
  SiteSystem sys(n,
                 {{"s1", combo(-1, v1, -2, v2)},
                  {"s2", combo(-1, v2, -2, v1)},
                  {"t1", combo(-1, v1, 2 * (1 + beta), v2)},
                  {"t2", combo(-1, v2, 2 * (1 + beta), v1)}},
                 {"s1", "s2"});
  for (const auto& s : sys.sites())
    if (std::abs(dist2(s.point, x) - (5 + 4 * beta)) > 1e-9 * std::max(1.0, norm2(x)))
      throw Error(Errc::NumericallyIllConditioned, "wedge sites off the apex circle");
  return sys;
}

/// Sites realizing the non-cyclic convex quadrilateral A C B D (boundary order).
inline SiteSystem construct_quadrilateral(const Point& A, const Point& C, const Point& B, const Point& D) {
  using namespace detail::plane;
  for (const auto* p : {&A, &C, &B, &D})
    if (p->dim() != 2) throw Error(Errc::DimensionMismatch, "quadrilateral construction is planar");
  Chain chain{{A, C, B, D}, std::nullopt, std::nullopt};
  const int orient = orientation(chain);
  if (orient == 0) throw Error(Errc::NonConvexInput, "vertices do not form a strictly convex quadrilateral");
  if (cyclic_test(A, C, B, D)) throw ImpossibleShape(Errc::CyclicInput, impossibility(ImpossibilityKind::CyclicQuadrilateral));
  const HPolyhedron target = chain_hrep(chain, orient);
  // line i runs from vertex i to vertex i+1, so lines i and i+1 meet at vertex i+1
  std::array<Line, 4> lines{};
  std::array<double, 4> angles{};
  for (int i = 0; i < 4; ++i) {
    lines[i] = through(chain.pts[i], chain.pts[(i + 1) % 4]);
    angles[i] = interior_angle(chain, (i + 1) % 4);
  }
  auto sys = four_line_sites(lines, target, ShapeTag::BoundedQuadrilateral, chain.pts, angles);
  if (!sys) throw Error(Errc::ConstructionFailed, "no relabeling reproduced the quadrilateral");
  return *sys;
}

/// Sites realizing the unbounded polygon with vertices v1, v2 and rays r1 (at v1), r2 (at v2).
inline SiteSystem construct_unbounded_three(const Point& v1, const Point& v2, const Point& r1, const Point& r2) {
  using namespace detail::plane;
  for (const auto* p : {&v1, &v2, &r1, &r2})
    if (p->dim() != 2) throw Error(Errc::DimensionMismatch, "unbounded construction is planar");
  if (std::sqrt(dist2(v1, v2)) < 1e-12) throw Error(Errc::NotThreeSided, "coincident vertices describe a wedge");
  const Point d1 = unit(r1), d2 = unit(r2);
  if (parallel(d1, d2, 1e-6))
    throw ImpossibleShape(Errc::ParallelUnboundedSides, impossibility(ImpossibilityKind::ParallelSidedTwoVertexUnbounded));
  const Point gap = v2 - v1;
  if (std::abs(cross(unit(gap), d1)) < 1e-12 || std::abs(cross(unit(gap), d2)) < 1e-12)
    throw Error(Errc::NotThreeSided, "a ray continues the bounded side");
  Chain chain{{v1, v2}, d1, d2};
  const int orient = orientation(chain);
  if (orient == 0) throw Error(Errc::NonConvexInput, "rays and vertices do not bound a convex region");
  const HPolyhedron target = chain_hrep(chain, orient);
  const double len = length(gap);

  struct Role {
    Point a, b, ra, rb;
    double alpha, beta;
  };
  const double ang1 = interior_angle(chain, 0), ang2 = interior_angle(chain, 1);
  std::vector<Role> roles{{v1, v2, d1, d2, ang1, ang2}, {v2, v1, d2, d1, ang2, ang1}};
  if (ang1 > ang2) std::swap(roles[0], roles[1]);  // beta >= alpha first

  auto attempt = [&](const Role& r, const Point& dir, double rho) -> std::optional<SiteSystem> {
    const Line ab = through(r.a, r.b), la{r.a, r.ra}, lb{r.b, r.rb};
    const Point t1 = r.a + rho * dir;
    const Point s1 = reflect(t1, ab), s2 = reflect(t1, la), t2 = reflect(s1, lb);
    try {
      SiteSystem sys = four_sites(s1, s2, t1, t2);
      if (realizes(sys, target, ShapeTag::UnboundedThreeSide, chain.pts)) return sys;
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  double eps = 0.1;
  for (int retry = 0; retry <= 8; ++retry, eps /= 2) {
    for (const auto& r : roles) {
      const double gamma = r.alpha + r.beta - std::numbers::pi;
      const Point ba = unit(r.a - r.b);
      for (const Point& dir : {rotate(ba, gamma), rotate(ba, -gamma), rotate(ba, std::numbers::pi + gamma),
                               rotate(ba, std::numbers::pi - gamma)})
        if (auto sys = attempt(r, dir, eps * len)) return *sys;
    }
  }
  throw Error(Errc::ConstructionFailed, "no site placement reproduced the unbounded polygon");
}

/// Sites realizing the unbounded quadrilateral with interior vertex a and
/// parallel sides leaving b and c along r.
inline SiteSystem construct_unbounded_quad_parallel(const Point& a, const Point& b, const Point& c, const Point& r) {
  using namespace detail::plane;
  for (const auto* p : {&a, &b, &c, &r})
    if (p->dim() != 2) throw Error(Errc::DimensionMismatch, "unbounded construction is planar");
  const Point d = unit(r);
  const Line l1{b, d}, l2{c, d};
  const double side_a1 = cross(d, a - b), side_a2 = cross(d, a - c), side_c = cross(d, c - b);
  if (std::abs(side_c) < 1e-9) throw Error(Errc::VertexOnBandBoundary, "parallel sides coincide");
  // a strictly between l1 and l2
  if (!(side_a1 * side_c > 0 && std::abs(side_a1) > 1e-9 && side_a2 * side_c < 0 && std::abs(side_a2) > 1e-9))
    throw Error(Errc::VertexOnBandBoundary, "interior vertex is not strictly inside the band");
  Chain chain{{b, a, c}, d, d};
  const double alpha = std::numbers::pi - angle(a - b, c - a);
  if (alpha >= std::numbers::pi - 1e-9) throw Error(Errc::FlatAngle, "angle at the interior vertex is flat");
  const int orient = orientation(chain);
  if (orient == 0) throw Error(Errc::NonConvexInput, "vertices and rays do not bound a convex region");
  const HPolyhedron target = chain_hrep(chain, orient);
  const std::array<Line, 4> lines{l1, through(b, a), through(a, c), l2};
  auto sys = four_line_sites(lines, target, ShapeTag::UnboundedQuadrilateral, chain.pts, std::nullopt);
  if (!sys) throw Error(Errc::ConstructionFailed, "no relabeling reproduced the parallel-sided quadrilateral");
  return *sys;
}

/// Sites realizing the unbounded quadrilateral with boundary chain c, a, d and
/// nonparallel rays r1 (at c) and r2 (at d).
inline SiteSystem construct_unbounded_quad_general(const Point& c, const Point& a, const Point& d, const Point& r1,
                                                   const Point& r2) {
  using namespace detail::plane;
  for (const auto* p : {&c, &a, &d, &r1, &r2})
    if (p->dim() != 2) throw Error(Errc::DimensionMismatch, "unbounded construction is planar");
  const Point u1 = unit(r1), u2 = unit(r2);
  const std::array<Point, 4> sides{u1, unit(a - c), unit(d - a), u2};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (parallel(sides[i], sides[j], 1e-6)) throw Error(Errc::ParallelSides, "two sides are parallel");
  Chain chain{{c, a, d}, u1, u2};
  const int orient = orientation(chain);
  if (orient == 0) throw Error(Errc::NonConvexInput, "vertices and rays do not bound a convex region");
  const HPolyhedron target = chain_hrep(chain, orient);
  const std::array<Line, 4> lines{Line{c, u1}, through(c, a), through(a, d), Line{d, u2}};
  auto sys = four_line_sites(lines, target, ShapeTag::UnboundedQuadrilateral, chain.pts, std::nullopt);
  if (!sys) throw Error(Errc::ConstructionFailed, "no relabeling reproduced the unbounded quadrilateral");
  return *sys;
}

/// The smallest empty cell: S = {(-1,0), (1,0)} and T\S = {(0,0)}, padded to n dimensions.
inline SiteSystem construct_empty(std::size_t n = 2) {
  if (n < 1) throw Error(Errc::DimensionMismatch, "dimension must be positive");
  auto pt = [n](double x) {
    std::vector<double> c(n, 0.0);
    c[0] = x;
    return Point(std::move(c));
  };
  return SiteSystem(n, {{"s1", pt(-1)}, {"s2", pt(1)}, {"t", pt(0)}}, {"s1", "s2"});
}

inline ConstructionResult construct(const TargetShape& target) {
  try {
    return std::visit(
        [](const auto& t) -> SiteSystem {
          using U = std::decay_t<decltype(t)>;
          if constexpr (std::is_same_v<U, EmptyTarget>) return construct_empty();
          else if constexpr (std::is_same_v<U, SingletonTarget>) return construct_singleton(t.c);
          else if constexpr (std::is_same_v<U, HalfspaceTarget>) return construct_halfspace(t.d, t.gamma, t.sigma, t.tau);
          else if constexpr (std::is_same_v<U, StripTarget>) return construct_strip(t.d, t.alpha, t.beta);
          else if constexpr (std::is_same_v<U, WedgeTarget>) return construct_wedge(t.v1, t.v2, t.b1, t.b2);
          else if constexpr (std::is_same_v<U, NonCyclicQuadTarget>)
            return construct_quadrilateral(t.vertices[0], t.vertices[1], t.vertices[2], t.vertices[3]);
          else if constexpr (std::is_same_v<U, UnboundedThreeTarget>) return construct_unbounded_three(t.v1, t.v2, t.r1, t.r2);
          else if constexpr (std::is_same_v<U, UnboundedQuadParallelTarget>)
            return construct_unbounded_quad_parallel(t.a, t.b, t.c, t.r);
          else return construct_unbounded_quad_general(t.c, t.a, t.d, t.r1, t.r2);
        },
        target);
  } catch (const ImpossibleShape& e) {
    return e.reason();
  }
}

namespace detail {

// Vertices lying on row i of a reduced planar hrep.
inline std::vector<Point> vertices_on(const HPolyhedron& p, std::size_t i, const std::vector<Point>& verts) {
  const Halfspace u = unit_halfspace(p.halfspaces()[i]);
  std::vector<Point> out;
  for (const auto& v : verts)
    if (std::abs(u.slack(v)) <= 1e-8 * std::max(1.0, std::sqrt(norm2(v)))) out.push_back(v);
  return out;
}

// For an unbounded polygon: the ray vertices with their outgoing directions.
inline std::vector<std::pair<Point, Point>> ray_ends(const HPolyhedron& red, const std::vector<Point>& verts) {
  const auto rays = edge_rays(red.halfspaces());
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i = 0; i < red.size(); ++i) {
    std::vector<Point> mine;
    for (const auto& r : rays)
      if (r.first == i) mine.push_back(r.second);
    if (mine.size() != 1) continue;
    auto on = vertices_on(red, i, verts);
    if (on.size() != 1) throw Error(Errc::UnrecognizedShape, "unbounded side without a unique vertex");
    out.emplace_back(on.front(), mine.front());
  }
  return out;
}

}  // namespace detail

/// Sites realizing a planar polyhedron given by at most four rows, or the
/// reason no |S| = 2, |T| = 4 configuration can.
inline ConstructionResult construct(const HPolyhedron& target) {
  if (target.dim() != 2) throw Error(Errc::DimensionMismatch, "construction targets are planar");
  const CellShape shape = classify_hrep2d(target);
  if (shape.reduced && shape.reduced->size() > 4)
    throw Error(Errc::UnrecognizedShape, "more than four irredundant rows");
  const auto& v = shape.vertices;
  switch (shape.tag) {
    case ShapeTag::Empty:
      return construct_empty();
    case ShapeTag::Singleton:
      return construct_singleton(v.front());
    case ShapeTag::OneDimensional:
      return impossibility(ImpossibilityKind::OneDimensional);
    case ShapeTag::Triangle:
      return impossibility(ImpossibilityKind::Triangle);
    case ShapeTag::Halfplane: {
      const Halfspace u = unit_halfspace(shape.reduced->halfspaces()[0]);
      return construct_halfspace(u.normal(), u.offset(), 2, 4);
    }
    case ShapeTag::Strip: {
      const Halfspace u0 = unit_halfspace(shape.reduced->halfspaces()[0]);
      const Halfspace u1 = unit_halfspace(shape.reduced->halfspaces()[1]);
      return construct_strip(u0.normal(), -u1.offset(), u0.offset());
    }
    case ShapeTag::Wedge: {
      const Halfspace u0 = unit_halfspace(shape.reduced->halfspaces()[0]);
      const Halfspace u1 = unit_halfspace(shape.reduced->halfspaces()[1]);
      return construct_wedge(u0.normal(), u1.normal(), u0.offset(), u1.offset());
    }
    case ShapeTag::BoundedQuadrilateral:
      if (*shape.cyclic) return impossibility(ImpossibilityKind::CyclicQuadrilateral);
      return construct(TargetShape{NonCyclicQuadTarget{{v[0], v[1], v[2], v[3]}}});
    case ShapeTag::UnboundedThreeSide: {
      if (*shape.parallel_unbounded_sides) return impossibility(ImpossibilityKind::ParallelSidedTwoVertexUnbounded);
      const auto ends = detail::ray_ends(*shape.reduced, v);
      if (ends.size() != 2) throw Error(Errc::UnrecognizedShape, "expected two unbounded sides");
      return construct(TargetShape{UnboundedThreeTarget{ends[0].first, ends[1].first, ends[0].second, ends[1].second}});
    }
    case ShapeTag::UnboundedQuadrilateral: {
      const auto ends = detail::ray_ends(*shape.reduced, v);
      if (ends.size() != 2 || v.size() != 3) throw Error(Errc::UnrecognizedShape, "expected two unbounded sides");
      Point mid = v[0];
      for (const auto& w : v)
        if (dist2(w, ends[0].first) > 1e-16 && dist2(w, ends[1].first) > 1e-16) mid = w;
      if (*shape.parallel_unbounded_sides)
        return construct(TargetShape{UnboundedQuadParallelTarget{mid, ends[0].first, ends[1].first, ends[0].second}});
      return construct(TargetShape{
          UnboundedQuadGeneralTarget{ends[0].first, mid, ends[1].first, ends[0].second, ends[1].second}});
    }
    case ShapeTag::OtherPolygon:
      break;
  }
  throw Error(Errc::UnrecognizedShape, std::string("no construction for ") + std::string(to_string(shape.tag)));
}

}  // namespace mvc

#endif  // MVC_CONSTRUCTIONS_HPP
