#pragma once

#include "cydesing/group/finite_group.hpp"
#include "cydesing/torus/fixed_set.hpp"

namespace cydesing {

struct SingularComponent {
  std::size_t dimension = 0;                 // real dimension
  Vector<Rational> representative;           // lattice coordinates
  std::vector<Vector<Rational>> direction;   // lattice coordinates
  std::size_t orbit_size = 1;                // number of copies in the cover
  IndexSet generic_stabilizer;               // fixes the component pointwise
  IndexSet setwise_stabilizer;               // maps the component to itself
  std::string label;                         // "T^2", "T^2/Z2", "point", ...
  std::string action;                        // "-1" when the quotient acts by negation
  std::vector<Vector<Rational>> special_points;  // points of the component with larger stabilizer
};

struct IntersectionPoint {
  Vector<Rational> point;
  IndexSet stabilizer;
  std::vector<std::size_t> components;       // component orbit indices through the point (with repetition)
  std::size_t orbit_size = 1;
};

struct SingularSetReport {
  std::vector<SingularComponent> components;
  std::vector<IntersectionPoint> intersection_points;
};

SingularSetReport singular_set(const FiniteMatrixGroup& g, const TorusLattice& l);

}  // namespace cydesing
