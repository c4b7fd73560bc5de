#include "cydesing/mckay/invariant_pair.hpp"

#include "cydesing/exact/field_linalg.hpp"

#include <random>

namespace cydesing {

namespace {

constexpr long long kWitnessBound = 97;
constexpr std::size_t kWitnessAttempts = 1000;

template <class F>
Vector<F> combine(const std::vector<Vector<F>>& basis, const std::vector<Rational>& coeffs, std::size_t dim) {
  Vector<F> v(dim, F(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) v[j] += basis[i][j] * F(coeffs[i]);
  return v;
}

}  // namespace

Rational evaluate(const Vector<Rational>& alpha, const LatVector& delta) {
  Rational s(0);
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (delta[i]) s += alpha[i] * Rational(delta[i]);
  return s;
}

Cyclotomic evaluate(const Vector<Cyclotomic>& beta, const LatVector& delta) {
  Cyclotomic s(0);
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (delta[i]) s += beta[i] * Cyclotomic(Rational(delta[i]));
  return s;
}

InvariantPairProblem make_invariant_pair_problem(const RootSystem& rs, const ChiLift& chi,
                                                 const std::vector<Cyclotomic>& phi) {
  if (chi.images.size() != phi.size()) throw PreconditionError("phi and chi have different coset counts");
  const std::size_t r = rs.rank();
  InvariantPairProblem p{rs, chi, phi, {}, {}, {}};
  RatMatrix stack_a(0, r);
  Matrix<Cyclotomic> stack_b(0, r);
  const RatMatrix id = RatMatrix::identity(r);
  for (std::size_t k = 0; k < chi.images.size(); ++k) {
    RatMatrix rho = convert<Rational>(chi.images[k].dual_matrix());
    p.dual_actions.push_back(rho);
    stack_a = stack_a.stacked(rho - id);
    stack_b = stack_b.stacked(convert<Cyclotomic>(rho).scaled(phi[k]) - convert<Cyclotomic>(id));
  }
  p.A = kernel_basis(stack_a, 1u << 20);
  p.B = kernel_basis(stack_b, 1u << 20);
  return p;
}

bool is_invariant_pair(const InvariantPairProblem& p, const Vector<Rational>& alpha, const Vector<Cyclotomic>& beta) {
  for (std::size_t k = 0; k < p.dual_actions.size(); ++k) {
    if (!(p.dual_actions[k] * alpha == alpha)) return false;
    auto rb = convert<Cyclotomic>(p.dual_actions[k]) * beta;
    for (auto& x : rb) x *= p.phi[k];
    if (!(rb == beta)) return false;
  }
  return true;
}

bool is_generic_pair(const InvariantPairProblem& p, const Vector<Rational>& alpha, const Vector<Cyclotomic>& beta) {
  for (const auto& d : p.root_system.roots)
    if (evaluate(alpha, d).is_zero() && evaluate(beta, d).is_zero()) return false;
  return true;
}

InvariantPairDecision invariant_pair_decide(const InvariantPairProblem& p, std::uint64_t seed) {
  InvariantPairDecision out;
  const std::size_t r = p.root_system.rank();
  for (const auto& d : p.root_system.roots) {
    bool a_vanishes = true, b_vanishes = true;
    for (const auto& a : p.A)
      if (!evaluate(a, d).is_zero()) a_vanishes = false;
    for (const auto& b : p.B)
      if (!evaluate(b, d).is_zero()) b_vanishes = false;
    if (a_vanishes && b_vanishes) {
      out.blocking_root = d;
      return out;
    }
  }
  out.exists = true;

  const std::size_t na = p.A.size(), nb = p.B.size();
  auto accept = [&](const std::vector<Rational>& coeffs) {
    std::vector<Rational> ca(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(na));
    std::vector<Rational> cb(coeffs.begin() + static_cast<std::ptrdiff_t>(na), coeffs.end());
    auto alpha = combine(p.A, ca, r);
    auto beta = combine(p.B, cb, r);
    if (!is_generic_pair(p, alpha, beta)) return false;
    out.alpha = std::move(alpha);
    out.beta = std::move(beta);
    return true;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> num(-kWitnessBound, kWitnessBound);
  std::uniform_int_distribution<long long> den(1, kWitnessBound);
  bool found = false;
  for (std::size_t t = 0; t < kWitnessAttempts && !found; ++t) {
    ++out.attempts;
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < na + nb; ++i) coeffs.emplace_back(Integer(static_cast<long>(num(rng))), Integer(static_cast<long>(den(rng))));
    found = accept(coeffs);
  }
  // Moment curve (1, t, t^2, ...): each root rules out fewer than na + nb values of t.
  for (long long t = 1; !found; ++t) {
    out.used_fallback = true;
    std::vector<Rational> coeffs;
    Rational pw(1);
    for (std::size_t i = 0; i < na + nb; ++i) {
      coeffs.push_back(pw);
      pw *= Rational(t);
    }
    found = accept(coeffs);
    if (t > static_cast<long long>((na + nb + 1) * p.root_system.roots.size() + 1))
      throw InternalError("moment-curve witness search failed");
  }
  if (!is_invariant_pair(p, out.alpha, out.beta)) throw InternalError("witness fails the invariance equations");
  return out;
}

}  // namespace cydesing
