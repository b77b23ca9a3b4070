#pragma once

// Exact dense linear solves, and the parameter-identity test used for
// bivariate identities whose second variable is a bound numeric value.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsob/scalar.hpp"

namespace qsob {

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

template <Scalar S>
struct LinearSolution {
  SolveStatus status = SolveStatus::kInconsistent;
  std::vector<S> x;
};

/// Solves rows * x = rhs by Gauss-Jordan elimination with exact pivots.
/// Overdetermined systems are accepted; any leftover equation must reduce to 0 = 0.
template <ExactScalar S>
LinearSolution<S> solve_linear(std::vector<std::vector<S>> rows, std::vector<S> rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("row/rhs count mismatch");
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && is_zero(rows[p][c])) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      const S f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (!is_zero(rhs[i])) return {SolveStatus::kInconsistent, {}};
  }
  if (r < n) return {SolveStatus::kUnderdetermined, {}};
  std::vector<S> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / rows[i][pivot_col[i]];
  return {SolveStatus::kUnique, std::move(x)};
}

/// Decides an identity in a parameter y whose two sides are rational in y of
/// degree at most `degree_bound`: it holds identically iff it holds at
/// degree_bound + 1 distinct admissible values. `check(y)` returns nullopt when
/// y is a pole of either side; such values are skipped.
inline bool holds_identically_in_parameter(
    const std::function<std::optional<bool>(const Rational&)>& check, int degree_bound) {
  int accepted = 0;
  for (long k = 0; accepted <= degree_bound; ++k) {
    if (k > 64L * (degree_bound + 2)) throw std::runtime_error("ran out of admissible parameter values");
    // 2, 15/7, 16/7, ... : distinct, positive, away from the usual special points 0 and +-1.
    Rational y(14 + k, 7);
    y.canonicalize();
    auto verdict = check(y);
    if (!verdict) continue;
    if (!*verdict) return false;
    ++accepted;
  }
  return true;
}

}  // namespace qsob
