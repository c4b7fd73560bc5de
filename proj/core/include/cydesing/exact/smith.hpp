#pragma once

#include "cydesing/exact/matrix.hpp"
#include "cydesing/exact/rational.hpp"

namespace cydesing {

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

struct SmithDecomposition {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal
  IntMatrix V;  // cols x cols, unimodular
  std::vector<Integer> invariant_factors;  // min(rows, cols) diagonal entries, zeros last
};

// U * M * V = D with D[i] | D[i+1]. Pivot: smallest nonzero absolute value,
// ties by row-major position.
SmithDecomposition snf(const IntMatrix& m, std::size_t cap = kDefaultMatrixCap);

// Exact inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace cydesing
