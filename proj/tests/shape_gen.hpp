#ifndef MVC_SHAPE_GEN_HPP
#define MVC_SHAPE_GEN_HPP

// Random valid construction targets, each with an independent H-representation.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mvc/constructions.hpp"

namespace mvc::testing {

struct GeneratedTarget {
  TargetShape target;
  HPolyhedron hrep;
  ShapeTag tag;
  std::vector<Point> vertices;
  std::optional<bool> parallel;
};

class ShapeGen {
 public:
  explicit ShapeGen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Point dir() {
    const double t = uniform(0, 2 * std::numbers::pi);
    return Point{std::cos(t), std::sin(t)};
  }
  Point point(double spread) { return Point{uniform(-spread, spread), uniform(-spread, spread)}; }

  GeneratedTarget singleton() {
    Point c = point(5);
    HPolyhedron h(2, {Halfspace({1, 0}, c[0]), Halfspace({-1, 0}, -c[0]), Halfspace({0, 1}, c[1]),
                      Halfspace({0, -1}, -c[1])});
    return {SingletonTarget{c}, h, ShapeTag::Singleton, {c}, std::nullopt};
  }

  GeneratedTarget halfspace() {
    Point d = dir();
    const double g = uniform(-5, 5);
    const int sigma = 1 + static_cast<int>(uniform(0, 3));
    const int tau = sigma + 1 + static_cast<int>(uniform(0, 3));
    HPolyhedron h(2, {Halfspace(d.coords(), g)});
    return {HalfspaceTarget{d.coords(), g, sigma, tau}, h, ShapeTag::Halfplane, {}, std::nullopt};
  }

  GeneratedTarget strip() {
    Point d = dir();
    const double a = uniform(-5, 5), b = a + uniform(0.1, 3);
    HPolyhedron h(2, {Halfspace(d.coords(), b), Halfspace((-1.0 * d).coords(), -a)});
    return {StripTarget{d.coords(), a, b}, h, ShapeTag::Strip, {}, std::nullopt};
  }

  GeneratedTarget wedge() {
    Point v1 = dir();
    const double th = uniform(0.2, std::numbers::pi - 0.2) * (uniform(0, 1) < 0.5 ? 1 : -1);
    Point v2{std::cos(th) * v1[0] - std::sin(th) * v1[1], std::sin(th) * v1[0] + std::cos(th) * v1[1]};
    const double b1 = uniform(-3, 3), b2 = uniform(-3, 3);
    HPolyhedron h(2, {Halfspace(v1.coords(), b1), Halfspace(v2.coords(), b2)});
    const double det = v1[0] * v2[1] - v1[1] * v2[0];
    Point apex{(b1 * v2[1] - v1[1] * b2) / det, (v1[0] * b2 - b1 * v2[0]) / det};
    return {WedgeTarget{v1.coords(), v2.coords(), b1, b2}, h, ShapeTag::Wedge, {apex}, std::nullopt};
  }

  // Radially perturbed points on a circle, kept clear of the cyclic case.
  std::array<Point, 4> convex_quad(bool cyclic) {
    while (true) {
      std::vector<double> ang(4);
      for (auto& a : ang) a = uniform(0, 2 * std::numbers::pi);
      std::sort(ang.begin(), ang.end());
      bool spaced = true;
      for (int i = 0; i < 4; ++i) {
        const double gap = i < 3 ? ang[i + 1] - ang[i] : 2 * std::numbers::pi - ang[3] + ang[0];
        spaced = spaced && gap > 0.3;
      }
      if (!spaced) continue;
      const Point c = point(3);
      const double r = uniform(0.5, 3);
      std::array<Point, 4> q;
      for (int i = 0; i < 4; ++i) {
        const double rr = cyclic ? r : r * uniform(0.7, 1.3);
        q[i] = c + Point{rr * std::cos(ang[i]), rr * std::sin(ang[i])};
      }
      detail::plane::Chain chain{{q[0], q[1], q[2], q[3]}, std::nullopt, std::nullopt};
      if (detail::plane::orientation(chain) != 1) continue;
      auto m = concyclic_measure(q[0], q[1], q[2], q[3]);
      if (!m) continue;
      if (!cyclic && std::abs(*m) < 1e-3) continue;
      return q;
    }
  }

  GeneratedTarget quad() {
    auto q = convex_quad(false);
    detail::plane::Chain chain{{q[0], q[1], q[2], q[3]}, std::nullopt, std::nullopt};
    return {NonCyclicQuadTarget{q}, detail::plane::chain_hrep(chain, 1), ShapeTag::BoundedQuadrilateral,
            {q.begin(), q.end()}, std::nullopt};
  }

  GeneratedTarget unbounded_three() {
    using detail::plane::rotate;
    const Point v1 = point(3);
    const Point e = dir();
    const Point v2 = v1 + uniform(0.5, 3) * e;
    double a, b;
    do {
      a = uniform(0.3, std::numbers::pi - 0.3);
      b = uniform(0.3, std::numbers::pi - 0.3);
    } while (a + b < std::numbers::pi + 0.1);
    const Point r1 = rotate(e, a), r2 = rotate(-1.0 * e, -b);
    detail::plane::Chain chain{{v1, v2}, r1, r2};
    return {UnboundedThreeTarget{v1, v2, r1, r2}, detail::plane::chain_hrep(chain, detail::plane::orientation(chain)),
            ShapeTag::UnboundedThreeSide, {v1, v2}, false};
  }

  GeneratedTarget unbounded_quad_parallel() {
    using detail::plane::rotate;
    const double w = uniform(0.5, 3), th = uniform(0, 2 * std::numbers::pi);
    const Point o = point(3);
    auto frame = [&](double x, double y) { return o + rotate(Point{x, y}, th); };
    const Point a = frame(0, uniform(0.2, 0.8) * w), b = frame(uniform(0.2, 2) * w, w), c = frame(uniform(0.2, 2) * w, 0);
    const Point r = rotate(Point{1, 0}, th);
    detail::plane::Chain chain{{b, a, c}, r, r};
    return {UnboundedQuadParallelTarget{a, b, c, r},
            detail::plane::chain_hrep(chain, detail::plane::orientation(chain)), ShapeTag::UnboundedQuadrilateral,
            {a, b, c}, true};
  }

  GeneratedTarget unbounded_quad_general() {
    using detail::plane::rotate;
    while (true) {
      const Point apex = point(3);
      const Point u1 = dir();
      const double beta = uniform(0.3, 2.5);
      const Point u2 = rotate(u1, beta);
      const Point c = apex + uniform(0.5, 3) * u1, d = apex + uniform(0.5, 3) * u2;
      double w1 = uniform(0.1, 1), w2 = uniform(0.1, 1), w3 = uniform(0.1, 1);
      const double t = w1 + w2 + w3;
      const Point a = (w1 / t) * apex + (w2 / t) * c + (w3 / t) * d;
      const std::array<Point, 4> sides{u1, a - c, d - a, u2};
      bool ok = true;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) ok = ok && !detail::plane::parallel(sides[i], sides[j], 0.05);
      detail::plane::Chain chain{{c, a, d}, u1, u2};
      const int o = detail::plane::orientation(chain);
      if (!ok || o == 0) continue;
      return {UnboundedQuadGeneralTarget{c, a, d, u1, u2}, detail::plane::chain_hrep(chain, o),
              ShapeTag::UnboundedQuadrilateral, {c, a, d}, false};
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mvc::testing

#endif  // MVC_SHAPE_GEN_HPP
