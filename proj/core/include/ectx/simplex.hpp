#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ectx/tolerance.hpp"

namespace ectx {

struct Phase1Options {
  double pivot_tolerance = tol::kPivot;
  double optimality_tolerance = 1e-12;
  double feasibility_threshold = tol::kFeasibility;
  int max_iterations = 200000;
};

struct Phase1Result {
  bool feasible = false;
  // Optimal sum of artificial variables.
  double residual = 0.0;
  // Primal point x >= 0 (size = columns of A).
  std::vector<double> x;
  // Farkas certificate y (size = rows of A) with yᵀA <= 0 and yᵀb = residual,
  // so yᵀb > 0 proves infeasibility. Always filled; meaningful when infeasible.
  std::vector<double> farkas;
  int iterations = 0;
  bool hit_iteration_limit = false;
};

// Decides whether {x >= 0 : A x = b} is non-empty by minimising the sum of
// one artificial variable per row with a dense-tableau simplex. Entering and
// leaving variables follow Bland's rule, so degenerate problems cannot cycle.
// Redundant rows are fine: their artificials simply stay basic at zero.
Phase1Result solve_phase1(const Eigen::MatrixXd& a, std::span<const double> b,
                          const Phase1Options& options = {});

}  // namespace ectx
