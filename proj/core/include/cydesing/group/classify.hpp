#pragma once

#include "cydesing/group/motion.hpp"

#include <optional>

namespace cydesing {

enum class MotionKind { SpecialUnitary, Unitary, AntiLinear, Other };

const char* to_string(MotionKind k);

struct MotionClass {
  MotionKind kind;
  std::optional<Cyclotomic> determinant;  // set for complex-linear isometries
};

MotionClass su_classify(const Motion& g);

// Scalar by which g acts on complex coordinate `line` (0-based).
// Throws SplittingNotPreserved if g mixes that line with the others.
Cyclotomic splitting_multiplier(const Motion& g, std::size_t line);

// Pullback of the Cayley 4-form by g equals the form. Requires dim_real == 8.
bool spin7_check(const Motion& g);

}  // namespace cydesing
