#ifndef MVC_LP_HPP
#define MVC_LP_HPP

/*! \file
    \brief Certified linear feasibility.

Every answer carries evidence that can be checked without trusting the
solver: a feasible point, or nonnegative multipliers that combine the rows
into the contradiction 0'x <= c with c < 0 (Farkas' lemma). The two
alternatives are solved as separate standard-form problems so each verdict is
backed by its own witness.
*/

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvc/core.hpp"
#include "mvc/error.hpp"
#include "mvc/scalar.hpp"
#include "mvc/simplex.hpp"

namespace mvc {

enum class Relation { LessEqual, Equal };

template <class T>
struct LinearRow {
  std::vector<T> coeffs;
  Relation relation = Relation::LessEqual;
  T rhs{0};
};

template <class T>
class BasicLinearSystem {
 public:
  BasicLinearSystem(std::size_t num_vars, std::vector<LinearRow<T>> rows)
      : num_vars_(num_vars), rows_(std::move(rows)) {
    if (num_vars_ == 0) throw Error(Errc::DimensionMismatch, "a linear system needs at least one variable");
    for (const auto& r : rows_)
      if (r.coeffs.size() != num_vars_) throw Error(Errc::DimensionMismatch, "row length differs from num_vars");
  }

  static BasicLinearSystem from(const BasicHPolyhedron<T>& p) {
    std::vector<LinearRow<T>> rows;
    for (const auto& h : p.halfspaces()) rows.push_back({h.normal(), Relation::LessEqual, h.offset()});
    return BasicLinearSystem(p.dim(), std::move(rows));
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<LinearRow<T>>& rows() const noexcept { return rows_; }

  /// Rows as inequalities only: an equality contributes (a, b) then (-a, -b).
  std::vector<LinearRow<T>> expanded() const {
    std::vector<LinearRow<T>> out;
    for (const auto& r : rows_) {
      out.push_back({r.coeffs, Relation::LessEqual, r.rhs});
      if (r.relation == Relation::Equal) {
        LinearRow<T> neg{r.coeffs, Relation::LessEqual, -r.rhs};
        for (auto& v : neg.coeffs) v = -v;
        out.push_back(std::move(neg));
      }
    }
    return out;
  }

 private:
  std::size_t num_vars_;
  std::vector<LinearRow<T>> rows_;
};

/// Nonnegative multipliers, one per row of the expanded inequality system.
template <class T>
struct FarkasCertificate {
  std::vector<T> multipliers;
};

enum class Feasibility { Feasible, Infeasible };

template <class T>
struct FeasibilityResult {
  Feasibility status = Feasibility::Infeasible;
  std::optional<BasicPoint<T>> witness;
  std::optional<FarkasCertificate<T>> certificate;

  bool feasible() const noexcept { return status == Feasibility::Feasible; }
};

namespace detail {

template <class T>
T inf_norm(const std::vector<T>& v) {
  T r(0);
  for (const auto& x : v) r = std::max(r, abs_value(x));
  return r;
}

template <class T>
void clamp_nonnegative(std::vector<T>& v) {
  for (auto& x : v) {
    if (x < T(0)) {
      if constexpr (!is_exact_v<T>) {
        if (x < T(-1e-12)) throw Error(Errc::NumericallyIllConditioned, "negative multiplier from the LP");
      } else {
        throw Error(Errc::NumericallyIllConditioned, "negative multiplier from the LP");
      }
      x = T(0);
    }
  }
}

// Columns of the standard-form image of {a'x <= b} with x = u - v free:
// [A, -A, I] (u, v, slack) = b.
template <class T>
BasicMatrix<T> free_split(const std::vector<LinearRow<T>>& rows, std::size_t n) {
  const std::size_t m = rows.size();
  BasicMatrix<T> M(m, std::vector<T>(2 * n + m, T(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      M[i][j] = rows[i].coeffs[j];
      M[i][n + j] = -rows[i].coeffs[j];
    }
    M[i][2 * n + i] = T(1);
  }
  return M;
}

}  // namespace detail

/// Decides {a_i'x <= b_i, e_k'x = f_k} and returns a witness or a Farkas certificate.
template <class T>
FeasibilityResult<T> solve_feasibility(const BasicLinearSystem<T>& sys, Tolerances tols = {}) {
  const std::size_t n = sys.num_vars();
  const auto rows = sys.expanded();
  const std::size_t m = rows.size();
  FeasibilityResult<T> out;
  if (m == 0) {
    out.status = Feasibility::Feasible;
    out.witness = BasicPoint<T>(std::vector<T>(n, T(0)));
    return out;
  }

  std::vector<T> b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = rows[i].rhs;
  auto primal = simplex::solve(detail::free_split(rows, n), b, std::optional<std::vector<T>>(), tols);
  if (primal.status != simplex::Status::Infeasible) {
    std::vector<T> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = primal.y[j] - primal.y[n + j];
    for (const auto& r : rows) {
      T viol = dot(r.coeffs, x) - r.rhs;
      T scale = std::max(T(1), detail::inf_norm(r.coeffs));
      if (viol > tol<T>(tols.feasibility) * scale)
        throw Error(Errc::NumericallyIllConditioned, "witness violates a row beyond tolerance");
    }
    out.status = Feasibility::Feasible;
    out.witness = BasicPoint<T>(std::move(x));
    return out;
  }

  // Alternative system: y >= 0, A'y = 0, b'y = -1.
  BasicMatrix<T> alt(n + 1, std::vector<T>(m, T(0)));
  std::vector<T> rhs(n + 1, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) alt[j][i] = rows[i].coeffs[j];
    alt[n][i] = rows[i].rhs;
  }
  rhs[n] = T(-1);
  auto dual = simplex::solve(alt, rhs, std::optional<std::vector<T>>(), tols);
  if (dual.status == simplex::Status::Infeasible)
    throw Error(Errc::NumericallyIllConditioned, "neither the system nor its Farkas alternative is solvable");
  auto y = std::move(dual.y);
  detail::clamp_nonnegative(y);
  T combined_rhs(0);
  std::vector<T> combined(n, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    combined_rhs += y[i] * rows[i].rhs;
    for (std::size_t j = 0; j < n; ++j) combined[j] += y[i] * rows[i].coeffs[j];
  }
  if (detail::inf_norm(combined) > tol<T>(tols.feasibility) * std::max(T(1), detail::inf_norm(y)) ||
      !(combined_rhs < -tol<T>(tols.pivot)))
    throw Error(Errc::NumericallyIllConditioned, "Farkas certificate failed verification");
  out.status = Feasibility::Infeasible;
  out.certificate = FarkasCertificate<T>{std::move(y)};
  return out;
}

template <class T>
FeasibilityResult<T> solve_feasibility(const BasicHPolyhedron<T>& p, Tolerances tols = {}) {
  return solve_feasibility(BasicLinearSystem<T>::from(p), tols);
}

namespace detail {

template <class T>
std::optional<std::vector<T>> nonnegative_combination(const std::vector<T>& target,
                                                      const std::vector<std::vector<T>>& generators,
                                                      bool convex, Tolerances tols) {
  const std::size_t d = target.size();
  for (const auto& g : generators)
    if (g.size() != d) throw Error(Errc::DimensionMismatch, "generator length differs from target");
  const std::size_t k = generators.size();
  if (k == 0) {
    if (convex) return std::nullopt;
    if (inf_norm(target) <= tol<T>(tols.feasibility)) return std::vector<T>{};
    return std::nullopt;
  }
  BasicMatrix<T> M(d + (convex ? 1 : 0), std::vector<T>(k, T(0)));
  std::vector<T> h(M.size(), T(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) M[i][j] = generators[j][i];
    h[i] = target[i];
  }
  if (convex) {
    for (std::size_t j = 0; j < k; ++j) M[d][j] = T(1);
    h[d] = T(1);
  }
  auto res = simplex::solve(M, h, std::optional<std::vector<T>>(), tols);
  if (res.status == simplex::Status::Infeasible) return std::nullopt;
  auto lambda = std::move(res.y);
  clamp_nonnegative(lambda);
  std::vector<T> recon(d, T(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d; ++i) recon[i] += lambda[j] * generators[j][i];
  T scale(1);
  for (std::size_t j = 0; j < k; ++j) scale = std::max(scale, lambda[j] * inf_norm(generators[j]));
  for (std::size_t i = 0; i < d; ++i)
    if (abs_value(T(recon[i] - target[i])) > tol<T>(tols.feasibility) * scale)
      throw Error(Errc::NumericallyIllConditioned, "cone combination does not reproduce the target");
  if (convex) {
    T sum(0);
    for (const auto& l : lambda) sum += l;
    if (abs_value(T(sum - T(1))) > tol<T>(tols.feasibility))
      throw Error(Errc::NumericallyIllConditioned, "convex coefficients do not sum to one");
  }
  return lambda;
}

}  // namespace detail

/// Nonnegative lambda with sum lambda_i g_i = target, or nullopt.
template <class T>
std::optional<FarkasCertificate<T>> in_cone(const std::vector<T>& target,
                                            const std::vector<std::vector<T>>& generators, Tolerances tols = {}) {
  auto l = detail::nonnegative_combination(target, generators, false, tols);
  if (!l) return std::nullopt;
  return FarkasCertificate<T>{std::move(*l)};
}

/// Convex coefficients reproducing target, or nullopt.
template <class T>
std::optional<std::vector<T>> in_convex_hull(const std::vector<T>& target, const std::vector<std::vector<T>>& points,
                                             Tolerances tols = {}) {
  return detail::nonnegative_combination(target, points, true, tols);
}

enum class Optimum { Optimal, Unbounded, Infeasible };

template <class T>
struct MaximizeResult {
  Optimum status = Optimum::Infeasible;
  std::optional<BasicPoint<T>> argmax;
  T value{0};
};

/// Maximizes objective'x over {a_i'x <= b_i}.
template <class T>
MaximizeResult<T> maximize(const std::vector<T>& objective, const std::vector<BasicHalfspace<T>>& system,
                           Tolerances tols = {}) {
  const std::size_t n = objective.size();
  std::vector<LinearRow<T>> rows;
  for (const auto& h : system) {
    if (h.dim() != n) throw Error(Errc::DimensionMismatch, "objective length differs from system dimension");
    rows.push_back({h.normal(), Relation::LessEqual, h.offset()});
  }
  MaximizeResult<T> out;
  if (rows.empty()) {
    out.status = detail::inf_norm(objective) > T(0) ? Optimum::Unbounded : Optimum::Optimal;
    out.argmax = BasicPoint<T>(std::vector<T>(n, T(0)));
    return out;
  }
  const std::size_t m = rows.size();
  std::vector<T> b(m), cost(2 * n + m, T(0));
  for (std::size_t i = 0; i < m; ++i) b[i] = rows[i].rhs;
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = -objective[j];
    cost[n + j] = objective[j];
  }
  auto res = simplex::solve(detail::free_split(rows, n), b, std::optional<std::vector<T>>(cost), tols);
  if (res.status == simplex::Status::Infeasible) return out;
  std::vector<T> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = res.y[j] - res.y[n + j];
  out.status = res.status == simplex::Status::Unbounded ? Optimum::Unbounded : Optimum::Optimal;
  out.value = dot(objective, x);
  out.argmax = BasicPoint<T>(std::move(x));
  return out;
}

/// Whether every point of the (feasible) system satisfies candidate.
template <class T>
bool implied(const BasicHalfspace<T>& candidate, const std::vector<BasicHalfspace<T>>& system, Tolerances tols = {}) {
  auto r = maximize(candidate.normal(), system, tols);
  if (r.status == Optimum::Infeasible) throw Error(Errc::InfeasibleBase, "implication over an infeasible system");
  if (r.status == Optimum::Unbounded) return false;
  T slack = tol<T>(tols.feasibility);
  if constexpr (!is_exact_v<T>) slack *= std::sqrt(dot(candidate.normal(), candidate.normal()));
  return r.value <= candidate.offset() + slack;
}

using LinearSystem = BasicLinearSystem<double>;

}  // namespace mvc

#endif  // MVC_LP_HPP
