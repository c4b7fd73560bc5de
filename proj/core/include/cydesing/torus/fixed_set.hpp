#pragma once

#include "cydesing/torus/lattice.hpp"

namespace cydesing {

inline constexpr std::size_t kDefaultComponentCap = 1000000;

// Solutions of A c = 0 mod Z^m for c in R^m / Z^m, in lattice coordinates.
class SubtorusFamily {
 public:
  SubtorusFamily(IntMatrix congruence, std::size_t component_cap = kDefaultComponentCap);

  std::size_t ambient_dim() const { return congruence_.cols(); }
  std::size_t dimension() const { return free_.size(); }
  const Integer& component_count() const { return count_; }
  // One point per component, coordinates in [0, 1); component index order.
  const std::vector<Vector<Rational>>& representatives() const { return reps_; }
  // Basis of the tangent directions (lattice coordinates).
  const std::vector<Vector<Rational>>& direction() const { return direction_; }
  const IntMatrix& congruence() const { return congruence_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }

  bool contains(const Vector<Rational>& c) const;
  // Mixed-radix index of the component through c; c must be contained.
  std::size_t component_of(const Vector<Rational>& c) const;

 private:
  IntMatrix congruence_;
  IntMatrix v_inverse_;
  std::vector<Integer> factors_;            // nonzero invariant factors, by position in discrete_
  std::vector<std::size_t> discrete_;       // coordinates of V^{-1} c with nonzero factor
  std::vector<std::size_t> free_;
  Integer count_;
  std::vector<Vector<Rational>> reps_;
  std::vector<Vector<Rational>> direction_;
};

Vector<Rational> reduce_mod_one(Vector<Rational> c);

SubtorusFamily fixed_set(const Motion& g, const TorusLattice& l);
SubtorusFamily common_fixed_set(const std::vector<Motion>& gs, const TorusLattice& l);

}  // namespace cydesing
