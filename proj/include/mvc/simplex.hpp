#ifndef MVC_SIMPLEX_HPP
#define MVC_SIMPLEX_HPP

// Dense two-phase simplex on standard form
//
//     minimize c'y  subject to  M y = h,  y >= 0
//
// with Bland's rule for both the entering and the leaving variable, so the
// pivot sequence is deterministic and cannot cycle in exact arithmetic.
// Instantiated with double (tolerance-driven signs) and Rational (exact).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mvc/core.hpp"
#include "mvc/error.hpp"
#include "mvc/scalar.hpp"

namespace mvc::simplex {

enum class Status { Optimal, Infeasible, Unbounded };

template <class T>
struct Result {
  Status status = Status::Infeasible;
  std::vector<T> y;  // primal solution, valid unless Infeasible
  T objective{0};    // c'y at the returned point
  T phase_one{0};    // residual infeasibility left by phase one
};

template <class T>
class Tableau {
 public:
  Tableau(const BasicMatrix<T>& M, const std::vector<T>& h, Tolerances tolerances)
      : m_(M.size()), n_(M.empty() ? 0 : M.front().size()), tols_(tolerances) {
    for (const auto& row : M)
      if (row.size() != n_) throw Error(Errc::DimensionMismatch, "ragged constraint matrix");
    if (h.size() != m_) throw Error(Errc::DimensionMismatch, "rhs length differs from row count");
    cols_ = n_ + m_ + 1;
    a_.assign(m_ * cols_, T(0));
    for (std::size_t i = 0; i < m_; ++i) {
      T scale(1);
      if constexpr (!is_exact_v<T>) {
        T big(0);
        for (const auto& v : M[i]) big = std::max(big, abs_value(v));
        big = std::max(big, abs_value(h[i]));
        if (big > T(0)) scale = T(1) / big;
      }
      T sign = h[i] < T(0) ? T(-1) : T(1);
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign * scale * M[i][j];
      at(i, n_ + i) = T(1);
      at(i, rhs()) = sign * scale * h[i];
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    alive_.assign(m_, true);
  }

  Result<T> run(const std::optional<std::vector<T>>& cost) {
    if (cost && cost->size() != n_) throw Error(Errc::DimensionMismatch, "cost length differs from column count");
    // phase one: minimize the sum of artificials
    cost_.assign(cols_, T(0));
    for (std::size_t j = n_; j < n_ + m_; ++j) cost_[j] = T(1);
    price();
    iterate(n_ + m_);

    Result<T> res;
    res.phase_one = -cost_[rhs()];
    if (res.phase_one > tol<T>(tols_.feasibility)) {
      res.status = Status::Infeasible;
      return res;
    }
    drive_out_artificials();

    if (cost) {
      cost_.assign(cols_, T(0));
      for (std::size_t j = 0; j < n_; ++j) cost_[j] = (*cost)[j];
      price();
      if (!iterate(n_)) {
        res.status = Status::Unbounded;
        res.y = solution();
        res.objective = objective(*cost, res.y);
        return res;
      }
    }
    res.status = Status::Optimal;
    res.y = solution();
    if (cost) res.objective = objective(*cost, res.y);
    return res;
  }

 private:
  std::size_t rhs() const { return cols_ - 1; }
  T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  // Reduced costs of the current basis for cost_ (rhs slot holds -objective).
  void price() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!alive_[i]) continue;
      T cb = cost_[basis_[i]];
      if (cb == T(0)) continue;
      for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= cb * at(i, j);
    }
  }

  // Returns false on an unbounded ray. Only columns below `allowed` may enter.
  bool iterate(std::size_t allowed) {
    const T dtol = tol<T>(tols_.feasibility) * T(1e-3);
    const T ptol = tol<T>(tols_.pivot);
    const std::size_t cap = 50 * (m_ + n_ + 10) + 10000;
    for (std::size_t it = 0; it < cap; ++it) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost_[j] < -dtol) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      T best(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (!alive_[i] || at(i, *enter) <= ptol) continue;
        T ratio = at(i, rhs()) / at(i, *enter);
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
    throw Error(Errc::NumericallyIllConditioned, "simplex iteration limit reached");
  }

  void pivot(std::size_t r, std::size_t c) {
    const T p = at(r, c);
    if (abs_value(p) <= tol<T>(tols_.pivot)) throw Error(Errc::NumericallyIllConditioned, "pivot below tolerance");
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) /= p;
    at(r, c) = T(1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || !alive_[i]) continue;
      T f = at(i, c);
      if (f == T(0)) continue;
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = T(0);
    }
    T f = cost_[c];
    if (f != T(0)) {
      for (std::size_t j = 0; j < cols_; ++j) cost_[j] -= f * at(r, j);
      cost_[c] = T(0);
    }
    basis_[r] = c;
  }

  // Zero-level artificials left in the basis are swapped for structural
  // columns; rows where that is impossible are linearly dependent and dropped.
  void drive_out_artificials() {
    const T ptol = tol<T>(tols_.pivot);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!alive_[i] || basis_[i] < n_) continue;
      std::optional<std::size_t> col;
      T best(0);
      for (std::size_t j = 0; j < n_; ++j) {
        T v = abs_value(at(i, j));
        if (v > ptol && v > best) {
          col = j;
          best = v;
          if constexpr (is_exact_v<T>) break;
        }
      }
      if (col) {
        pivot(i, *col);
      } else {
        alive_[i] = false;
      }
    }
  }

  std::vector<T> solution() const {
    std::vector<T> y(n_, T(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (!alive_[i] || basis_[i] >= n_) continue;
      T v = at(i, rhs());
      if constexpr (!is_exact_v<T>) {
        if (v < T(0)) v = T(0);
      }
      y[basis_[i]] = v;
    }
    return y;
  }

  static T objective(const std::vector<T>& c, const std::vector<T>& y) {
    T r(0);
    for (std::size_t j = 0; j < c.size(); ++j) r += c[j] * y[j];
    return r;
  }

  std::size_t m_, n_, cols_ = 0;
  Tolerances tols_;
  std::vector<T> a_;
  std::vector<T> cost_;
  std::vector<std::size_t> basis_;
  std::vector<bool> alive_;
};

/// Feasibility (cost absent) or minimization of c'y over {My = h, y >= 0}.
template <class T>
Result<T> solve(const BasicMatrix<T>& M, const std::vector<T>& h,
                const std::optional<std::vector<T>>& cost = std::nullopt, Tolerances tolerances = {}) {
  Tableau<T> tab(M, h, tolerances);
  return tab.run(cost);
}

}  // namespace mvc::simplex

#endif  // MVC_SIMPLEX_HPP
