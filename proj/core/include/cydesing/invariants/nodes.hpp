#pragma once

#include "cydesing/exact/matrix.hpp"
#include "cydesing/exact/rational.hpp"

namespace cydesing {

inline constexpr std::size_t kDefaultConstraintCap = 200000;

// Homology classes of the exceptional curves of a set of nodes.
struct NodeConfiguration {
  std::size_t dimension = 0;
  std::vector<Vector<Rational>> classes;
};

struct SmoothabilityResult {
  bool smoothable = false;
  Vector<Rational> lambda;  // primitive integral, first coordinate positive
};

// A relation sum lambda_j [Sigma_j] = 0 with every lambda_j nonzero.
SmoothabilityResult node_smoothable(const NodeConfiguration& cfg);

struct KahlerResult {
  bool positive = false;
  Vector<Rational> functional;  // strictly positive on every class
};

// A linear functional strictly positive on every class, by Fourier-Motzkin elimination.
KahlerResult node_kahler(const NodeConfiguration& cfg, std::size_t constraint_cap = kDefaultConstraintCap);

}  // namespace cydesing
