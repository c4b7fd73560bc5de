#pragma once

// Compound matrices: the action of a linear map on k-th exterior powers in
// the basis of lexicographically ordered k-subsets.

#include "cydesing/exact/field_linalg.hpp"

#include <cstdint>

namespace cydesing {

inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// C_k(M)[I][J] = det M[I, J].
template <class F>
Matrix<F> exterior_power(const Matrix<F>& m, std::size_t k) {
  auto rs = k_subsets(m.rows(), k);
  auto cs = k_subsets(m.cols(), k);
  Matrix<F> out(rs.size(), cs.size());
  if (k == 0) {
    out(0, 0) = F(1);
    return out;
  }
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = determinant(m.submatrix(rs[i], cs[j]));
  return out;
}

}  // namespace cydesing
