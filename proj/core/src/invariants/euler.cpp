#include "cydesing/invariants/euler.hpp"

namespace cydesing {

Integer euler_characteristic(const SubtorusFamily& f) {
  return f.dimension() > 0 ? Integer(0) : f.component_count();
}

OrbifoldEuler orbifold_euler(const FiniteMatrixGroup& g, const Ambient& space) {
  if (space.dim_real != g.dim_real()) throw PreconditionError("group and space dimensions differ");
  OrbifoldEuler out;
  out.group_order = g.order();
  out.pre_division_sum = 0;
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (g.mul(a, b) != g.mul(b, a)) continue;
      const std::size_t weight = a == b ? 1 : 2;
      out.commuting_pairs += weight;
      // Fixed sets of linear actions on a vector space are contractible.
      Integer chi = space.is_torus()
                        ? euler_characteristic(common_fixed_set({g.element(a), g.element(b)}, *space.lattice))
                        : Integer(1);
      out.pre_division_sum += chi * static_cast<unsigned long>(weight);
    }
  if (!mpz_divisible_ui_p(out.pre_division_sum.get_mpz_t(), static_cast<unsigned long>(n)))
    throw InternalError("orbifold Euler sum is not divisible by the group order");
  out.value = out.pre_division_sum / static_cast<unsigned long>(n);
  return out;
}

}  // namespace cydesing
