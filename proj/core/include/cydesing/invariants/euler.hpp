#pragma once

#include "cydesing/group/finite_group.hpp"
#include "cydesing/torus/fixed_set.hpp"

namespace cydesing {

// Either a flat torus R^m / Lambda or the vector space R^m.
struct Ambient {
  std::optional<TorusLattice> lattice;
  std::size_t dim_real = 0;

  static Ambient torus(TorusLattice l) {
    std::size_t d = l.rank();
    return Ambient{std::move(l), d};
  }
  static Ambient linear(std::size_t dim_real) { return Ambient{std::nullopt, dim_real}; }
  bool is_torus() const { return lattice.has_value(); }
};

struct OrbifoldEuler {
  Integer value;
  Integer pre_division_sum;
  std::size_t group_order = 0;
  std::size_t commuting_pairs = 0;
};

// Euler characteristic of a fixed family: 0 in positive dimension, else the component count.
Integer euler_characteristic(const SubtorusFamily& f);

OrbifoldEuler orbifold_euler(const FiniteMatrixGroup& g, const Ambient& space);

}  // namespace cydesing
