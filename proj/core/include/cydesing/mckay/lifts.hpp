#pragma once

#include "cydesing/ade/weyl.hpp"
#include "cydesing/mckay/kleinian.hpp"

namespace cydesing {

inline constexpr std::size_t kDefaultLiftCap = 1000000;

struct ChiLift {
  std::vector<ExtendedElement> images;  // per coset

  bool is_canonical() const;
};

// All homomorphisms K -> Aut(Gamma) x| W over psi. Canonical lift first, then
// lexicographic on the coset images. `cap` bounds the candidate count |W|^#generators.
std::vector<ChiLift> enumerate_chi_lifts(const PsiHom& psi, const WeylGroup& w, std::size_t cap = kDefaultLiftCap);

bool is_lift_of(const ChiLift& chi, const PsiHom& psi);

// phi(gH): the multiplier on the distinguished line, one value per coset.
std::vector<Cyclotomic> compute_phi(const FiniteMatrixGroup& g, const QuotientGroup& k, std::size_t line);

}  // namespace cydesing
