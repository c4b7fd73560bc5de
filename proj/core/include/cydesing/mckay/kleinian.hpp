#pragma once

#include "cydesing/ade/dynkin.hpp"
#include "cydesing/group/finite_group.hpp"

namespace cydesing {

struct KleinianClassification {
  FiniteMatrixGroup subgroup;               // H acting on C^2
  std::vector<std::size_t> parent_index;    // H index -> index in the ambient group
  DynkinDiagram diagram;
  std::vector<IndexSet> classes;            // nonidentity classes, H indices
  // Each matching sends class position -> diagram vertex.
  std::vector<std::vector<std::size_t>> matchings;

  bool ambiguous() const { return matchings.size() > 1; }
};

KleinianClassification classify_kleinian(const FiniteMatrixGroup& h);
KleinianClassification classify_kleinian(const Subgroup& h);

struct PsiHom {
  QuotientGroup quotient;
  std::vector<VertexPermutation> images;    // per coset
  std::size_t matching = 0;                 // index of the matching used
  std::size_t compatible_matchings = 0;

  bool is_trivial() const;
};

// K = G/H acting on the diagram through conjugation of the classes of H.
PsiHom compute_psi(const FiniteMatrixGroup& g, const KleinianClassification& kc);

}  // namespace cydesing
