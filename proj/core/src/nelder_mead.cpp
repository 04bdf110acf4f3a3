#include "ectx/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ectx {

NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> start,
                                      const NelderMeadOptions& options) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  const std::size_t dim = start.size();
  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = f(x);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  };

  std::vector<std::vector<double>> simplex(dim + 1, start);
  std::vector<double> values(dim + 1);
  values[0] = eval(simplex[0]);
  for (std::size_t i = 0; i < dim; ++i) {
    simplex[i + 1][i] += options.initial_step;
    values[i + 1] = eval(simplex[i + 1]);
    // Step the other way if the first try left the domain.
    if (!std::isfinite(values[i + 1])) {
      simplex[i + 1][i] = start[i] - options.initial_step;
      values[i + 1] = eval(simplex[i + 1]);
    }
  }

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  auto along = [&](double t, std::vector<double>& out, const std::vector<double>& worst) {
    for (std::size_t k = 0; k < dim; ++k) out[k] = centroid[k] + t * (centroid[k] - worst[k]);
  };

  while (true) {
    // Best first; ties broken by vertex index for determinism.
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    const auto& best = simplex[order.front()];
    double spread = 0.0;
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        spread = std::max(spread, std::abs(simplex[order[i]][k] - best[k]));
      }
    }
    if (spread < options.x_tolerance) {
      result.converged = true;
      break;
    }
    if (result.evaluations >= options.max_evaluations) break;
    ++result.iterations;

    const std::size_t worst = order.back();
    const std::size_t second_worst = order[dim - 1];
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[order[i]][k] / dim;
    }

    along(kReflect, trial, simplex[worst]);
    const double reflected = eval(trial);
    if (reflected > values[order.front()]) {
      along(kExpand, trial2, simplex[worst]);
      const double expanded = eval(trial2);
      if (expanded > reflected) {
        simplex[worst] = trial2;
        values[worst] = expanded;
      } else {
        simplex[worst] = trial;
        values[worst] = reflected;
      }
      continue;
    }
    if (reflected > values[second_worst]) {
      simplex[worst] = trial;
      values[worst] = reflected;
      continue;
    }
    // Contract toward the better of the worst vertex and its reflection.
    const bool outside = reflected > values[worst];
    along(outside ? kContract : -kContract, trial2, simplex[worst]);
    const double contracted = eval(trial2);
    if (outside ? contracted >= reflected : contracted > values[worst]) {
      simplex[worst] = trial2;
      values[worst] = contracted;
      continue;
    }
    const std::size_t keep = order.front();
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == keep) continue;
      for (std::size_t k = 0; k < dim; ++k) {
        simplex[i][k] = simplex[keep][k] + kShrink * (simplex[i][k] - simplex[keep][k]);
      }
      values[i] = eval(simplex[i]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::max_element(values.begin(), values.end()) - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace ectx
