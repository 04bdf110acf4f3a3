#include "ectx/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ectx/error.hpp"

namespace ectx {

Phase1Result solve_phase1(const Eigen::MatrixXd& a, std::span<const double> b,
                          const Phase1Options& options) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (static_cast<Eigen::Index>(b.size()) != m) {
    throw ValidationError("right-hand side length does not match constraint rows");
  }

  // Tableau: rows 0..m-1 are constraints [A | I | b], row m holds reduced
  // costs and minus the objective. Rows with b < 0 are negated first.
  const Eigen::Index cols = n + m + 1;
  const Eigen::Index rhs = n + m;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, cols);
  std::vector<double> sign(m, 1.0);
  for (Eigen::Index i = 0; i < m; ++i) {
    sign[i] = b[i] < 0.0 ? -1.0 : 1.0;
    t.row(i).head(n) = sign[i] * a.row(i);
    t(i, n + i) = 1.0;
    t(i, rhs) = sign[i] * b[i];
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    t.row(m).head(n) -= t.row(i).head(n);
    t(m, rhs) -= t(i, rhs);
  }
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

  Phase1Result result;
  while (true) {
    if (result.iterations >= options.max_iterations) {
      result.hit_iteration_limit = true;
      break;
    }
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (t(m, j) < -options.optimality_tolerance) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    Eigen::Index leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double pivot = t(i, entering);
      if (pivot <= options.pivot_tolerance) continue;
      const double ratio = std::max(t(i, rhs), 0.0) / pivot;
      if (leaving < 0) {
        best_ratio = ratio;
        leaving = i;
        continue;
      }
      const bool tie = std::abs(ratio - best_ratio) <= 1e-12 * std::max(1.0, best_ratio);
      if (tie) {
        if (basis[i] < basis[leaving]) leaving = i;
      } else if (ratio < best_ratio) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    // Phase 1 is bounded below by zero, so this only happens when every
    // candidate pivot is below tolerance; stop rather than divide by noise.
    if (leaving < 0) break;

    t.row(leaving) /= t(leaving, entering);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leaving) continue;
      const double factor = t(i, entering);
      if (factor != 0.0) t.row(i) -= factor * t.row(leaving);
    }
    basis[leaving] = entering;
    ++result.iterations;
  }

  result.residual = std::max(-t(m, rhs), 0.0);
  result.feasible = result.residual <= options.feasibility_threshold;
  result.x.assign(n, 0.0);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < n) result.x[basis[i]] = std::max(t(i, rhs), 0.0);
  }
  // Artificial column i has cost 1, so its reduced cost is 1 − y_i.
  result.farkas.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) result.farkas[i] = sign[i] * (1.0 - t(m, n + i));
  return result;
}

}  // namespace ectx
