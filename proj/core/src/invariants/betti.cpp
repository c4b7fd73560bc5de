#include "cydesing/invariants/betti.hpp"

#include "cydesing/exact/exterior.hpp"
#include "cydesing/torus/lattice.hpp"

namespace cydesing {

BettiVector BettiVector::from_hodge(const Integer& h11, const Integer& h21) {
  BettiVector v;
  v.closed = true;
  Integer b3 = 2 + 2 * h21;
  v.b = {1, 0, h11, b3, h11, 0, 1};
  return v;
}

Integer BettiVector::euler() const {
  Integer s = 0;
  for (std::size_t k = 0; k < b.size(); ++k) s += k % 2 ? Integer(-b[k]) : b[k];
  return s;
}

Integer BettiVector::h11() const {
  if (b.size() != 7) throw PreconditionError("Hodge numbers need a 3-fold");
  return b[2];
}

Integer BettiVector::h21() const {
  if (b.size() != 7) throw PreconditionError("Hodge numbers need a 3-fold");
  return b[3] / 2 - 1;
}

bool BettiVector::poincare_symmetric() const {
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k] != b[b.size() - 1 - k]) return false;
  return true;
}

BettiVector quotient_betti(const FiniteMatrixGroup& g, const TorusLattice& l) {
  const std::size_t m = l.rank();
  std::vector<RatMatrix> gens;
  for (auto x : g.generators()) gens.push_back(convert<Rational>(lattice_matrix(g.element(x), l)));
  BettiVector out;
  out.closed = true;
  for (std::size_t k = 0; k <= m; ++k) {
    RatMatrix stacked;
    std::size_t width = 0;
    for (const auto& lg : gens) {
      // Pullback on k-forms is the transpose of the compound matrix.
      RatMatrix pull = exterior_power(lg, k).transpose();
      width = pull.cols();
      stacked = stacked.stacked(pull - RatMatrix::identity(width));
    }
    if (gens.empty()) {
      out.b.push_back(Integer(static_cast<unsigned long>(k_subsets(m, k).size())));
      continue;
    }
    out.b.push_back(Integer(static_cast<unsigned long>(kernel_basis(stacked, 1u << 20).size())));
  }
  return out;
}

}  // namespace cydesing
