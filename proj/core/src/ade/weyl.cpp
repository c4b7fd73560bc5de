#include "cydesing/ade/weyl.hpp"

#include "cydesing/exact/field_linalg.hpp"

namespace cydesing {

std::optional<std::size_t> WeylGroup::index_of(const LatMatrix& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Integer weyl_order_formula(const DynkinDiagram& d) {
  Integer fact = 1;
  switch (d.family) {
    case Family::A:
      for (int k = 2; k <= d.rank + 1; ++k) fact *= k;
      return fact;
    case Family::D: {
      for (int k = 2; k <= d.rank; ++k) fact *= k;
      Integer two = 1;
      two <<= static_cast<unsigned>(d.rank - 1);
      return fact * two;
    }
    case Family::E:
      if (d.rank == 6) return Integer(51840);
      if (d.rank == 7) return Integer(2903040);
      return Integer(696729600);
  }
  return fact;
}

WeylGroup weyl_group(const RootSystem& rs, std::size_t cap) {
  const std::size_t r = rs.rank();
  WeylGroup w;
  for (std::size_t i = 0; i < r; ++i) {
    LatMatrix s = LatMatrix::identity(r);
    for (std::size_t j = 0; j < r; ++j) s(i, j) -= rs.cartan(i, j);
    w.generators.push_back(std::move(s));
  }
  w.order = weyl_order_formula(rs.diagram);
  if (w.order > Integer(static_cast<unsigned long>(cap))) return w;

  w.elements.push_back(LatMatrix::identity(r));
  w.lookup_.emplace(w.elements.back(), 0);
  for (std::size_t i = 0; i < w.elements.size(); ++i)
    for (const auto& s : w.generators) {
      LatMatrix p = w.elements[i] * s;
      if (w.lookup_.emplace(p, w.elements.size()).second) w.elements.push_back(std::move(p));
    }
  if (Integer(static_cast<unsigned long>(w.elements.size())) != w.order)
    throw InternalError("Weyl group enumeration disagrees with the order formula");
  w.enumerated = true;
  return w;
}

ExtendedElement ExtendedElement::identity(std::size_t rank) {
  VertexPermutation p(rank);
  for (std::size_t i = 0; i < rank; ++i) p[i] = i;
  return {p, LatMatrix::identity(rank)};
}

LatMatrix ExtendedElement::lattice_matrix() const { return permutation_matrix(aut) * weyl; }

LatMatrix ExtendedElement::dual_matrix() const { return unimodular_inverse(lattice_matrix()).transpose(); }

ExtendedElement ExtendedElement::operator*(const ExtendedElement& o) const {
  LatMatrix p = permutation_matrix(o.aut);
  LatMatrix pinv = p.transpose();
  return {compose(aut, o.aut), pinv * weyl * p * o.weyl};
}

LatVector extended_action(const ExtendedElement& e, const LatVector& v) { return e.lattice_matrix() * v; }

LatVector extended_dual_action(const ExtendedElement& e, const LatVector& v) { return e.dual_matrix() * v; }

LatMatrix unimodular_inverse(const LatMatrix& m) {
  auto inv = inverse(convert<Rational>(m), 1u << 20);
  if (!inv) throw PreconditionError("matrix is singular");
  LatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = (*inv)(i, j);
      if (!x.is_integer()) throw PreconditionError("matrix is not unimodular");
      r(i, j) = x.num().get_si();
    }
  return r;
}

}  // namespace cydesing
