#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ectx {

struct NelderMeadOptions {
  double initial_step = 0.05;
  // Stop once every vertex is within this distance (max-norm) of the best.
  double x_tolerance = 1e-9;
  int max_evaluations = 20000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free maximisation. The objective may return -infinity to mark a
// point as outside the domain; such points are never accepted.
NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> start,
                                      const NelderMeadOptions& options = {});

}  // namespace ectx
