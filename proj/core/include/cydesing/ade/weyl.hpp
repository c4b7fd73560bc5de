#pragma once

#include "cydesing/ade/dynkin.hpp"
#include "cydesing/exact/rational.hpp"

#include <map>
#include <optional>

namespace cydesing {

inline constexpr std::size_t kDefaultWeylCap = 100000;

struct WeylGroup {
  std::vector<LatMatrix> generators;  // simple reflections on root-lattice coordinates
  std::vector<LatMatrix> elements;    // identity first; empty when not enumerated
  Integer order;
  bool enumerated = false;

  std::optional<std::size_t> index_of(const LatMatrix& m) const;

 private:
  friend WeylGroup weyl_group(const RootSystem& rs, std::size_t cap);
  std::map<LatMatrix, std::size_t> lookup_;
};

Integer weyl_order_formula(const DynkinDiagram& d);
WeylGroup weyl_group(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

// Element (a, w) of Aut(Gamma) x| W acting on the root lattice by P_a W.
struct ExtendedElement {
  VertexPermutation aut;
  LatMatrix weyl;

  static ExtendedElement identity(std::size_t rank);
  LatMatrix lattice_matrix() const;
  // (M^{-1})^T, acting on dual coordinates.
  LatMatrix dual_matrix() const;
  ExtendedElement operator*(const ExtendedElement& o) const;

  friend bool operator==(const ExtendedElement& a, const ExtendedElement& b) {
    return a.aut == b.aut && a.weyl == b.weyl;
  }
  friend bool operator<(const ExtendedElement& a, const ExtendedElement& b) {
    if (a.aut != b.aut) return a.aut < b.aut;
    return a.weyl < b.weyl;
  }
};

LatVector extended_action(const ExtendedElement& e, const LatVector& v);
LatVector extended_dual_action(const ExtendedElement& e, const LatVector& v);

// Inverse of an integer matrix with determinant +-1.
LatMatrix unimodular_inverse(const LatMatrix& m);

}  // namespace cydesing
