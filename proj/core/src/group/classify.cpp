#include "cydesing/group/classify.hpp"

#include "cydesing/exact/exterior.hpp"
#include "cydesing/group/cayley_constants.hpp"

namespace cydesing {

const char* to_string(MotionKind k) {
  switch (k) {
    case MotionKind::SpecialUnitary: return "special_unitary";
    case MotionKind::Unitary: return "unitary";
    case MotionKind::AntiLinear: return "anti_linear";
    case MotionKind::Other: return "other";
  }
  return "other";
}

MotionClass su_classify(const Motion& g) {
  if (g.is_complex_linear()) {
    if (!g.is_isometry()) return {MotionKind::Other, std::nullopt};
    Cyclotomic det = determinant(g.complex_matrix());
    return {det == Cyclotomic(1) ? MotionKind::SpecialUnitary : MotionKind::Unitary, det};
  }
  if (g.is_anti_linear()) return {MotionKind::AntiLinear, std::nullopt};
  return {MotionKind::Other, std::nullopt};
}

Cyclotomic splitting_multiplier(const Motion& g, std::size_t line) {
  if (line >= g.complex_dim()) throw PreconditionError("splitting line out of range");
  if (!g.is_complex_linear()) throw PreconditionError("splitting multiplier needs a complex-linear motion");
  auto a = g.complex_matrix();
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (k == line) continue;
    if (!a(line, k).is_zero() || !a(k, line).is_zero())
      throw SplittingNotPreserved("motion does not preserve the splitting at line " + std::to_string(line));
  }
  return a(line, line);
}

bool spin7_check(const Motion& g) {
  if (g.dim_real() != 8) throw PreconditionError("spin7_check needs dim_real = 8");
  auto subsets = k_subsets(8, 4);
  Vector<Rational> phi(subsets.size(), Rational(0));
  for (const auto& t : kCayleyForm) {
    std::vector<std::size_t> key(t.idx.begin(), t.idx.end());
    auto it = std::find(subsets.begin(), subsets.end(), key);
    phi[static_cast<std::size_t>(it - subsets.begin())] = Rational(t.coeff);
  }
  // (g^* Phi)_I = sum_J Phi_J det M[J, I].
  auto pulled = exterior_power(g.matrix(), 4).transpose() * phi;
  return pulled == phi;
}

}  // namespace cydesing
