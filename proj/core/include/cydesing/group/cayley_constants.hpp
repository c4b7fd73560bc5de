#pragma once

// Cayley 4-form on R^8 = C^4 with coordinates (x1, y1, ..., x4, y4) at
// indices 0..7: Phi = (1/2) omega^2 + Re(dz1 dz2 dz3 dz4), where
// omega = sum dx_j dy_j. Index quadruples are increasing.

#include <array>

namespace cydesing {

struct CayleyTerm {
  std::array<int, 4> idx;
  int coeff;
};

inline constexpr std::array<CayleyTerm, 14> kCayleyForm{{
    {{0, 1, 2, 3}, 1},
    {{0, 1, 4, 5}, 1},
    {{0, 1, 6, 7}, 1},
    {{2, 3, 4, 5}, 1},
    {{2, 3, 6, 7}, 1},
    {{4, 5, 6, 7}, 1},
    {{0, 2, 4, 6}, 1},
    {{1, 3, 5, 7}, 1},
    {{1, 3, 4, 6}, -1},
    {{1, 2, 5, 6}, -1},
    {{1, 2, 4, 7}, -1},
    {{0, 3, 5, 6}, -1},
    {{0, 3, 4, 7}, -1},
    {{0, 2, 5, 7}, -1},
}};

}  // namespace cydesing
