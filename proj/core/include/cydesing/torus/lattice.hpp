#pragma once

#include "cydesing/group/motion.hpp"

namespace cydesing {

// Lambda = B Z^{2n}; columns of B are the basis vectors in real coordinates.
class TorusLattice {
 public:
  explicit TorusLattice(RatMatrix basis);
  static TorusLattice standard(std::size_t dim_real);

  std::size_t rank() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }
  const RatMatrix& basis_inverse() const { return inverse_; }

  Vector<Rational> to_lattice_coords(const Vector<Rational>& x) const { return inverse_ * x; }
  Vector<Rational> to_real(const Vector<Rational>& c) const { return basis_ * c; }

 private:
  RatMatrix basis_;
  RatMatrix inverse_;
};

// B^{-1} g B; throws LatticeNotPreserved when it is not integral.
IntMatrix lattice_matrix(const Motion& g, const TorusLattice& l);

}  // namespace cydesing
