#pragma once

namespace ectx::tol {

inline constexpr double kUnitNorm = 1e-12;       // |‖v‖² − 1| for states and projectors
inline constexpr double kOrthogonal = 1e-9;      // |⟨a|b⟩| for jointly measurable pairs
inline constexpr double kMass = 1e-9;            // |Σp − 1| for probability tables
inline constexpr double kNegative = 1e-12;       // entries above −kNegative are clipped to 0
inline constexpr double kConsistency = 1e-9;     // shared-vertex marginal agreement
inline constexpr double kZeroProbability = 1e-15;  // treated as exactly 0 before taking logs
inline constexpr double kFeasibility = 1e-7;     // phase-1 objective threshold
inline constexpr double kPivot = 1e-10;          // simplex pivot magnitude
inline constexpr double kSymmetry = 1e-6;        // default for check_symmetries

}  // namespace ectx::tol
