#include "ectx/kcbs.hpp"

#include <algorithm>
#include <bit>

namespace ectx {

KcbsValue kcbs_value(const PentagonConfig& config) {
  validate(config);
  KcbsValue v;
  for (const auto& a : config.projectors) v.sum += outcome_probability(config.state, a);
  v.violation = v.sum - kKcbsClassicalBound;
  return v;
}

bool kcbs_admissible(unsigned assignment) {
  assignment &= 0x1fu;
  const unsigned rotated = ((assignment << 1) | (assignment >> 4)) & 0x1fu;
  return (assignment & rotated) == 0;
}

ClassicalKcbsCheck classical_kcbs_bound_check() {
  ClassicalKcbsCheck check;
  for (unsigned a = 0; a < 32; ++a) {
    if (!kcbs_admissible(a)) continue;
    ++check.admissible_assignments;
    check.max_sum = std::max(check.max_sum, std::popcount(a));
  }
  return check;
}

}  // namespace ectx
