#include "ectx/tables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ectx/error.hpp"
#include "ectx/tolerance.hpp"

namespace ectx {

PairTable validated(const PairTable& table) {
  PairTable out = table;
  double mass = 0.0;
  for (auto& row : out.p) {
    for (double& v : row) {
      if (!std::isfinite(v) || v < -tol::kNegative) {
        throw ValidationError("pair table has a negative or non-finite entry: " +
                              std::to_string(v));
      }
      v = std::clamp(v, 0.0, 1.0);
      mass += v;
    }
  }
  if (std::abs(mass - 1.0) > tol::kMass) {
    throw ValidationError("pair table is not normalized (mass " + std::to_string(mass) + ")");
  }
  return out;
}

void validate_distribution(std::span<const double> probabilities) {
  if (probabilities.empty()) throw ValidationError("empty distribution");
  double mass = 0.0;
  for (double v : probabilities) {
    if (!std::isfinite(v) || v < -tol::kNegative) {
      throw ValidationError("distribution has a negative or non-finite entry");
    }
    mass += v;
  }
  if (std::abs(mass - 1.0) > tol::kMass) {
    throw ValidationError("distribution is not normalized (mass " + std::to_string(mass) + ")");
  }
}

double max_abs_difference(const PairTable& a, const PairTable& b) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(a.p[i][j] - b.p[i][j]));
  }
  return worst;
}

PairTable table_from_counts(const std::array<std::array<double, 2>, 2>& counts) {
  double total = 0.0;
  for (const auto& row : counts) {
    for (double c : row) {
      if (!std::isfinite(c) || c < 0.0) throw ValidationError("negative or non-finite count");
      total += c;
    }
  }
  if (total <= 0.0) throw ValidationError("empty counts");
  PairTable t;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) t.p[i][j] = counts[i][j] / total;
  }
  return t;
}

}  // namespace ectx
