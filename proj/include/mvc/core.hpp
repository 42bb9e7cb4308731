#ifndef MVC_CORE_HPP
#define MVC_CORE_HPP

/*! \file
    \brief Sites, site systems and the halfspace description of
    multipoint Voronoi cells.

A multipoint (order-|S|) Voronoi cell of a finite site set T and a proper
subset S is the set of points no farther from every site of S than from every
site of T\S. It is the solution set of |S|(|T|-|S|) linear inequalities, one
bisector halfspace per pair (s, t) with s in S and t in T\S:

    <t - s, x> <= (|t|^2 - |s|^2) / 2

The types here are immutable values; everything is templated on the scalar so
the same code runs in double precision and in exact rational arithmetic.
*/

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mvc/error.hpp"
#include "mvc/scalar.hpp"

namespace mvc {

template <class T>
class BasicPoint {
 public:
  BasicPoint() = default;
  explicit BasicPoint(std::vector<T> coords) : coords_(std::move(coords)) { validate(); }
  BasicPoint(std::initializer_list<T> coords) : coords_(coords) { validate(); }

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<T>& coords() const noexcept { return coords_; }
  const T& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const BasicPoint& a, const BasicPoint& b) { return a.coords_ == b.coords_; }

  friend BasicPoint operator+(const BasicPoint& a, const BasicPoint& b) {
    same_dim(a, b);
    std::vector<T> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return BasicPoint(std::move(r));
  }
  friend BasicPoint operator-(const BasicPoint& a, const BasicPoint& b) {
    same_dim(a, b);
    std::vector<T> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return BasicPoint(std::move(r));
  }
  friend BasicPoint operator*(const T& k, const BasicPoint& a) {
    std::vector<T> r(a.dim());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = k * a[i];
    return BasicPoint(std::move(r));
  }

  static void same_dim(const BasicPoint& a, const BasicPoint& b) {
    if (a.dim() != b.dim())
      throw Error(Errc::DimensionMismatch,
                  "points of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }

 private:
  void validate() const {
    if (coords_.empty()) throw Error(Errc::InvalidPoint, "a point needs at least one coordinate");
    if constexpr (!is_exact_v<T>) {
      for (const auto& c : coords_)
        if (!std::isfinite(as_double(c))) throw Error(Errc::InvalidPoint, "non-finite coordinate");
    }
  }

  std::vector<T> coords_;
};

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product of unequal lengths");
  T r(0);
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

template <class T>
T dot(const BasicPoint<T>& a, const BasicPoint<T>& b) {
  return dot(a.coords(), b.coords());
}

template <class T>
T norm2(const BasicPoint<T>& a) {
  return dot(a, a);
}

template <class T>
T dist2(const BasicPoint<T>& a, const BasicPoint<T>& b) {
  BasicPoint<T>::same_dim(a, b);
  T r(0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    T d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

template <class T>
struct BasicSite {
  std::string label;
  BasicPoint<T> point;
};

/// The pair (T, S): labeled sites and the labels designating S.
template <class T>
class BasicSiteSystem {
 public:
  using Site = BasicSite<T>;

  BasicSiteSystem(std::size_t dim, std::vector<Site> sites, std::vector<std::string> s_labels)
      : dim_(dim), sites_(std::move(sites)) {
    if (dim_ == 0) throw Error(Errc::InvalidSiteSystem, "dimension must be positive");
    std::set<std::string> labels;
    for (const auto& s : sites_) {
      if (s.point.dim() != dim_)
        throw Error(Errc::DimensionMismatch, "site '" + s.label + "' has dimension " +
                                                 std::to_string(s.point.dim()) + ", expected " +
                                                 std::to_string(dim_));
      if (s.label.empty()) throw Error(Errc::InvalidSiteSystem, "empty site label");
      if (!labels.insert(s.label).second)
        throw Error(Errc::InvalidSiteSystem, "duplicate label '" + s.label + "'");
    }
    std::set<std::string> chosen;
    for (const auto& l : s_labels) {
      if (!labels.count(l)) throw Error(Errc::InvalidSiteSystem, "S label '" + l + "' is not a site");
      chosen.insert(l);
    }
    if (chosen.empty()) throw Error(Errc::InvalidSiteSystem, "S must be nonempty");
    if (chosen.size() == sites_.size()) throw Error(Errc::InvalidSiteSystem, "S must be a proper subset of T");
    in_s_.reserve(sites_.size());
    for (const auto& s : sites_) in_s_.push_back(chosen.count(s.label) > 0);

    for (std::size_t i = 0; i < sites_.size(); ++i) {
      for (std::size_t j = i + 1; j < sites_.size(); ++j) {
        if (sites_[i].point == sites_[j].point)
          throw Error(Errc::DegenerateSites,
                      "sites '" + sites_[i].label + "' and '" + sites_[j].label + "' coincide");
        if constexpr (!is_exact_v<T>) {
          if (as_double(dist2(sites_[i].point, sites_[j].point)) < 1e-18) near_duplicate_ = true;
        }
      }
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Site>& sites() const noexcept { return sites_; }
  bool in_s(std::size_t i) const { return in_s_[i]; }
  /// True when two distinct sites are closer than 1e-9 (squared distance below 1e-18).
  bool near_duplicate() const noexcept { return near_duplicate_; }

  std::vector<std::string> s_labels() const {
    std::vector<std::string> r;
    for (std::size_t i = 0; i < sites_.size(); ++i)
      if (in_s_[i]) r.push_back(sites_[i].label);
    return r;
  }
  std::vector<Site> s_sites() const { return pick(true); }
  std::vector<Site> t_sites() const { return pick(false); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < sites_.size(); ++i)
      if (sites_[i].label == label) return i;
    return std::nullopt;
  }

 private:
  std::vector<Site> pick(bool s) const {
    std::vector<Site> r;
    for (std::size_t i = 0; i < sites_.size(); ++i)
      if (in_s_[i] == s) r.push_back(sites_[i]);
    return r;
  }

  std::size_t dim_;
  std::vector<Site> sites_;
  std::vector<bool> in_s_;
  bool near_duplicate_ = false;
};

/// <normal, x> <= offset
template <class T>
class BasicHalfspace {
 public:
  BasicHalfspace(std::vector<T> normal, T offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
    if (normal_.empty()) throw Error(Errc::InvalidHalfspace, "empty normal");
    if (std::all_of(normal_.begin(), normal_.end(), [](const T& v) { return v == T(0); }))
      throw Error(Errc::InvalidHalfspace, "zero normal");
  }

  std::size_t dim() const noexcept { return normal_.size(); }
  const std::vector<T>& normal() const noexcept { return normal_; }
  const T& offset() const noexcept { return offset_; }

  /// offset - <normal, x>; nonnegative inside.
  T slack(const BasicPoint<T>& x) const { return offset_ - dot(normal_, x.coords()); }
  bool contains(const BasicPoint<T>& x) const { return slack(x) >= T(0); }

  friend bool operator==(const BasicHalfspace&, const BasicHalfspace&) = default;

 private:
  std::vector<T> normal_;
  T offset_;
};

template <class T>
class BasicHPolyhedron {
 public:
  using Halfspace = BasicHalfspace<T>;
  using Provenance = std::vector<std::pair<std::string, std::string>>;

  BasicHPolyhedron(std::size_t dim, std::vector<Halfspace> halfspaces,
                   std::optional<Provenance> provenance = std::nullopt)
      : dim_(dim), halfspaces_(std::move(halfspaces)), provenance_(std::move(provenance)) {
    if (dim_ == 0) throw Error(Errc::InvalidHalfspace, "dimension must be positive");
    for (const auto& h : halfspaces_)
      if (h.dim() != dim_) throw Error(Errc::DimensionMismatch, "halfspace normal length differs from dim");
    if (provenance_ && provenance_->size() != halfspaces_.size())
      throw Error(Errc::InvalidHalfspace, "provenance length differs from the number of halfspaces");
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
  std::size_t size() const noexcept { return halfspaces_.size(); }
  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

  bool contains(const BasicPoint<T>& x) const {
    return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return h.contains(x); });
  }

  /// Same rows with extra halfspaces appended; provenance is dropped.
  BasicHPolyhedron with(const std::vector<Halfspace>& extra) const {
    auto rows = halfspaces_;
    rows.insert(rows.end(), extra.begin(), extra.end());
    return BasicHPolyhedron(dim_, std::move(rows));
  }

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
  std::optional<Provenance> provenance_;
};

/// Closed halfspace of points no farther from s than from t.
template <class T>
BasicHalfspace<T> bisector_halfspace(const BasicPoint<T>& s, const BasicPoint<T>& t) {
  BasicPoint<T>::same_dim(s, t);
  if (s == t) throw Error(Errc::DegenerateSites, "bisector of a point with itself");
  std::vector<T> normal(s.dim());
  for (std::size_t i = 0; i < normal.size(); ++i) normal[i] = t[i] - s[i];
  T offset = (norm2(t) - norm2(s)) / T(2);
  return BasicHalfspace<T>(std::move(normal), std::move(offset));
}

/// One bisector row per (s, t) in S x (T\S), in site order, with provenance.
template <class T>
BasicHPolyhedron<T> cell_hrep(const BasicSiteSystem<T>& sys) {
  std::vector<BasicHalfspace<T>> rows;
  typename BasicHPolyhedron<T>::Provenance prov;
  const auto ss = sys.s_sites();
  const auto ts = sys.t_sites();
  rows.reserve(ss.size() * ts.size());
  for (const auto& s : ss) {
    for (const auto& t : ts) {
      rows.push_back(bisector_halfspace(s.point, t.point));
      prov.emplace_back(s.label, t.label);
    }
  }
  return BasicHPolyhedron<T>(sys.dim(), std::move(rows), std::move(prov));
}

/// Distance-definition membership: max_s |x-s|^2 <= min_t |x-t|^2.
template <class T>
bool membership(const BasicPoint<T>& x, const BasicSiteSystem<T>& sys) {
  if (x.dim() != sys.dim()) throw Error(Errc::DimensionMismatch, "query point dimension differs from system");
  std::optional<T> far_s, near_t;
  for (std::size_t i = 0; i < sys.sites().size(); ++i) {
    T d = dist2(x, sys.sites()[i].point);
    if (sys.in_s(i)) {
      if (!far_s || d > *far_s) far_s = d;
    } else {
      if (!near_t || d < *near_t) near_t = d;
    }
  }
  return *far_s <= *near_t;
}

template <class T>
using BasicMatrix = std::vector<std::vector<T>>;

/// Axis-aligned box, lo[i] < hi[i] on every axis.
struct Box {
  std::vector<double> lo, hi;

  Box(std::vector<double> lo_, std::vector<double> hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.empty() || lo.size() != hi.size()) throw Error(Errc::DimensionMismatch, "box corners differ in dimension");
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (!(lo[i] < hi[i])) throw Error(Errc::PreconditionViolated, "degenerate box");
  }
  std::size_t dim() const noexcept { return lo.size(); }
};

/// Maps every site x to Qx + shift.
template <class T>
BasicSiteSystem<T> transform(const BasicSiteSystem<T>& sys, const BasicMatrix<T>& rotation,
                             const BasicPoint<T>& shift) {
  const std::size_t n = sys.dim();
  if (rotation.size() != n || shift.dim() != n)
    throw Error(Errc::DimensionMismatch, "rotation/shift dimension differs from system");
  for (const auto& row : rotation)
    if (row.size() != n) throw Error(Errc::DimensionMismatch, "rotation must be square");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T qtq(0);
      for (std::size_t k = 0; k < n; ++k) qtq += rotation[k][i] * rotation[k][j];
      T expect = i == j ? T(1) : T(0);
      if (abs_value(T(qtq - expect)) > tol<T>(1e-12)) throw Error(Errc::NotOrthogonal, "QᵀQ differs from I");
    }
  }
  std::vector<BasicSite<T>> out;
  out.reserve(sys.sites().size());
  for (const auto& s : sys.sites()) {
    std::vector<T> c(n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) c[i] += rotation[i][k] * s.point[k];
      c[i] += shift[i];
    }
    out.push_back({s.label, BasicPoint<T>(std::move(c))});
  }
  return BasicSiteSystem<T>(n, std::move(out), sys.s_labels());
}

using Point = BasicPoint<double>;
using Site = BasicSite<double>;
using SiteSystem = BasicSiteSystem<double>;
using Halfspace = BasicHalfspace<double>;
using HPolyhedron = BasicHPolyhedron<double>;
using Matrix = BasicMatrix<double>;

using ExactPoint = BasicPoint<Rational>;
using ExactSite = BasicSite<Rational>;
using ExactSiteSystem = BasicSiteSystem<Rational>;
using ExactHalfspace = BasicHalfspace<Rational>;
using ExactHPolyhedron = BasicHPolyhedron<Rational>;

/// Double-precision copy of an exact system.
inline SiteSystem to_double(const ExactSiteSystem& sys) {
  std::vector<Site> sites;
  for (const auto& s : sys.sites()) {
    std::vector<double> c;
    for (const auto& v : s.point.coords()) c.push_back(as_double(v));
    sites.push_back({s.label, Point(std::move(c))});
  }
  return SiteSystem(sys.dim(), std::move(sites), sys.s_labels());
}

}  // namespace mvc

#endif  // MVC_CORE_HPP
