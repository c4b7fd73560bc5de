#pragma once

#include "cydesing/mckay/lifts.hpp"

#include <cstdint>

namespace cydesing {

inline constexpr std::uint64_t kDefaultWitnessSeed = 20240607ULL;

struct InvariantPairProblem {
  RootSystem root_system;
  ChiLift chi;
  std::vector<Cyclotomic> phi;              // per coset
  std::vector<RatMatrix> dual_actions;      // rho(chi(k)) on dual coordinates, per coset
  std::vector<Vector<Rational>> A;          // basis of the alpha-space
  std::vector<Vector<Cyclotomic>> B;        // basis of the beta-space
};

InvariantPairProblem make_invariant_pair_problem(const RootSystem& rs, const ChiLift& chi,
                                                 const std::vector<Cyclotomic>& phi);

struct InvariantPairDecision {
  bool exists = false;
  Vector<Rational> alpha;
  Vector<Cyclotomic> beta;
  std::optional<LatVector> blocking_root;
  bool used_fallback = false;
  std::size_t attempts = 0;
};

InvariantPairDecision invariant_pair_decide(const InvariantPairProblem& p, std::uint64_t seed = kDefaultWitnessSeed);

// alpha(delta) for a dual vector in simple-root coordinates.
Rational evaluate(const Vector<Rational>& alpha, const LatVector& delta);
Cyclotomic evaluate(const Vector<Cyclotomic>& beta, const LatVector& delta);

bool is_invariant_pair(const InvariantPairProblem& p, const Vector<Rational>& alpha, const Vector<Cyclotomic>& beta);
bool is_generic_pair(const InvariantPairProblem& p, const Vector<Rational>& alpha, const Vector<Cyclotomic>& beta);

}  // namespace cydesing
