#pragma once

#include "ectx/quantum.hpp"

namespace ectx {

// Pentagram inequality in probability form: Σ p(A_i = 1) <= 2 for any
// noncontextual model; the quantum maximum is √5.
struct KcbsValue {
  double sum = 0.0;
  double violation = 0.0;  // sum − 2
};

KcbsValue kcbs_value(const PentagonConfig& config);

inline constexpr double kKcbsClassicalBound = 2.0;

struct ClassicalKcbsCheck {
  int max_sum = 0;
  int admissible_assignments = 0;  // out of 32
};

// Enumerates all 0/1 assignments to five cyclically exclusive projectors
// (no two neighbours both 1) and returns the largest number of ones.
ClassicalKcbsCheck classical_kcbs_bound_check();

// Whether a 5-bit assignment (bit i = A_{i+1}) has no two adjacent ones.
bool kcbs_admissible(unsigned assignment);

}  // namespace ectx
