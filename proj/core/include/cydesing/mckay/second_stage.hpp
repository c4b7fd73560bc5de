#pragma once

#include "cydesing/mckay/kleinian.hpp"

#include <array>

namespace cydesing {

enum class ModelSide { Resolution, Deformation };
enum class SecondStageOutcome { Free, IsolatedFixedPoints, CodimTwoFixedLocus, WholeSpaceFixed };

const char* to_string(SecondStageOutcome o);
const char* to_string(ModelSide s);

// C x X for H = Z_n acting on C^2 by (zeta, zeta^{-1}), with K acting
// diagonally by (sigma, a, b) on (z1, u, v). The deformation side is the
// hypersurface x y - z^n = beta, beta != 0, with x = u^n, y = v^n, z = u v.
struct ALocalModel {
  unsigned n = 2;
  ModelSide side = ModelSide::Resolution;
  QuotientGroup quotient;
  std::vector<std::array<Cyclotomic, 3>> weights;  // per coset: sigma, a, b
};

// Builds the model from G, the cyclic normal subgroup H and the distinguished line.
// Throws PreconditionError unless every element acts diagonally.
ALocalModel make_a_local_model(const FiniteMatrixGroup& g, const KleinianClassification& kc, std::size_t line,
                               ModelSide side);

struct FixedComponent {
  std::string locus;     // e.g. "curve 1", "C x curve 1", "chart 0 origin", "{x = y = z = 0}"
  int complex_dim = 0;
  IndexSet stabilizer;   // cosets fixing it pointwise
};

struct SecondStageResult {
  SecondStageOutcome outcome = SecondStageOutcome::Free;
  int ambient_dim = 3;
  std::vector<FixedComponent> components;  // maximal fixed components
};

SecondStageResult second_stage_classify(const ALocalModel& model);

struct ResidualGroup {
  std::string locus;
  IndexSet cosets;
  std::size_t order = 0;
};

// Stabilizers of the fixed components, as next-stage groups of order below |G|.
std::vector<ResidualGroup> iterate_residual(const FiniteMatrixGroup& g, const SecondStageResult& r);

}  // namespace cydesing
