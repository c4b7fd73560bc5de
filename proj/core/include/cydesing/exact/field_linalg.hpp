#pragma once

// Gaussian elimination over an exact field (Rational or Cyclotomic).

#include "cydesing/exact/matrix.hpp"

#include <optional>

namespace cydesing {

template <class F>
struct RowEchelon {
  Matrix<F> reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

template <class F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  RowEchelon<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == F(0)) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == F(0)) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m, std::size_t cap = kDefaultMatrixCap) {
  check_matrix_cap(m.rows(), m.cols(), cap, "rank");
  return row_reduce(m).pivots.size();
}

// Basis of {x : m x = 0}, one vector per free column, in increasing order of
// the free column. Each vector has a 1 in its free column.
template <class F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m, std::size_t cap = kDefaultMatrixCap) {
  check_matrix_cap(m.rows(), m.cols(), cap, "kernel_basis");
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
F determinant(Matrix<F> m) {
  if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
  F det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == F(0)) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == F(0)) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m, std::size_t cap = kDefaultMatrixCap) {
  if (!m.is_square()) throw PreconditionError("inverse of a non-square matrix");
  check_matrix_cap(m.rows(), m.cols(), cap, "inverse");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

// Some solution of m x = b, or nullopt when inconsistent.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& m, const Vector<F>& b, std::size_t cap = kDefaultMatrixCap) {
  check_matrix_cap(m.rows(), m.cols() + 1, cap, "solve");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  Vector<F> x(m.cols(), F(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
  return x;
}

// True when span(sub) is contained in span(super).
template <class F>
bool span_contains(const std::vector<Vector<F>>& super, const std::vector<Vector<F>>& sub, std::size_t dim) {
  if (sub.empty()) return true;
  auto base = Matrix<F>::from_rows(super, dim);
  std::size_t r0 = super.empty() ? 0 : row_reduce(base).pivots.size();
  auto all = super;
  all.insert(all.end(), sub.begin(), sub.end());
  return row_reduce(Matrix<F>::from_rows(all, dim)).pivots.size() == r0;
}

}  // namespace cydesing
