#pragma once

#include "cydesing/group/finite_group.hpp"
#include "cydesing/torus/lattice.hpp"

namespace cydesing {

struct BettiVector {
  std::vector<Integer> b;  // b^0 .. b^top
  bool closed = false;     // closed oriented manifold: Poincare duality applies

  // Calabi-Yau 3-fold data from Hodge numbers: b^2 = h11, b^3 = 2 + 2 h21.
  static BettiVector from_hodge(const Integer& h11, const Integer& h21);

  Integer euler() const;
  Integer h11() const;
  Integer h21() const;
  bool poincare_symmetric() const;
};

// b^k = dimension of the G-invariant k-forms on the torus.
BettiVector quotient_betti(const FiniteMatrixGroup& g, const TorusLattice& l);

}  // namespace cydesing
