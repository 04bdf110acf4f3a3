#pragma once

#include <array>
#include <span>

namespace ectx {

// Joint distribution of two binary outcomes, p[a][b] = p(first = a, second = b).
// Outcome 1 means "the projector clicks".
struct PairTable {
  std::array<std::array<double, 2>, 2> p{};

  double operator()(int a, int b) const { return p[a][b]; }
  double total() const { return p[0][0] + p[0][1] + p[1][0] + p[1][1]; }
  std::array<double, 2> first_marginal() const {
    return {p[0][0] + p[0][1], p[1][0] + p[1][1]};
  }
  std::array<double, 2> second_marginal() const {
    return {p[0][0] + p[1][0], p[0][1] + p[1][1]};
  }
  PairTable transposed() const {
    return PairTable{{{{p[0][0], p[1][0]}, {p[0][1], p[1][1]}}}};
  }

  friend bool operator==(const PairTable&, const PairTable&) = default;
};

// Throws ValidationError unless every entry is >= -tol::kNegative and the
// mass is within tol::kMass of 1. Returns a copy with entries clipped to [0, 1].
PairTable validated(const PairTable& table);

// Same contract for a flat probability vector.
void validate_distribution(std::span<const double> probabilities);

// Largest absolute entrywise difference.
double max_abs_difference(const PairTable& a, const PairTable& b);

// Table from raw (possibly non-integer) counts; throws ValidationError on an
// empty or negative count set.
PairTable table_from_counts(const std::array<std::array<double, 2>, 2>& counts);

}  // namespace ectx
