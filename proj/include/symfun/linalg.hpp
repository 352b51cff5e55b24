#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "symfun/errors.hpp"
#include "symfun/rational.hpp"

namespace symfun {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> identity_matrix(std::size_t n) {
  Matrix<F> m(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Matrix<F> matmul(const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<F> c(n, std::vector<F>(m, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!is_zero(b[l][j])) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

/// Determinant by Gaussian elimination over a field.
template <class F>
F determinant(Matrix<F> a) {
  const std::size_t n = a.size();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return F(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    F inv = F(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a[r][col])) continue;
      F f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!is_zero(a[col][c])) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

/// Solves X * a = b for X (row-vector convention, b has rows of length n).
/// Throws Error when a is singular.
template <class F>
Matrix<F> solve_right(Matrix<F> a, Matrix<F> b) {
  // transpose to column systems a^T x = b_row^T
  const std::size_t n = a.size();
  Matrix<F> at(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at[i][j] = a[j][i];
  // augmented columns are the rows of b
  const std::size_t m = b.size();
  Matrix<F> rhs(n, std::vector<F>(m, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) rhs[i][j] = b[j][i];
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(at[piv][col])) ++piv;
    if (piv == n) throw Error("singular matrix");
    std::swap(at[piv], at[col]);
    std::swap(rhs[piv], rhs[col]);
    F inv = F(1) / at[col][col];
    for (std::size_t c = col; c < n; ++c) at[col][c] *= inv;
    for (std::size_t c = 0; c < m; ++c) rhs[col][c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(at[r][col])) continue;
      F f = at[r][col];
      for (std::size_t c = col; c < n; ++c)
        if (!is_zero(at[col][c])) at[r][c] -= f * at[col][c];
      for (std::size_t c = 0; c < m; ++c)
        if (!is_zero(rhs[col][c])) rhs[r][c] -= f * rhs[col][c];
    }
  }
  Matrix<F> x(m, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) x[j][i] = rhs[i][j];
  return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  return solve_right(a, identity_matrix<F>(a.size()));
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
Integer bareiss_determinant(Matrix<Integer> a);

}  // namespace symfun
