#pragma once

// Finite-statistics simulation: draw outcome counts for jointly measurable
// pairs and estimate 𝒞 with a bootstrap confidence interval.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ectx/quantum.hpp"
#include "ectx/random.hpp"
#include "ectx/tables.hpp"

namespace ectx {

// Outcome counts of one context, n[a][b] for (first = a, second = b).
// Counts are doubles so synthetic pseudo-counts (p × N) are representable.
struct ContextCounts {
  std::array<std::array<double, 2>, 2> n{};

  double total() const { return n[0][0] + n[0][1] + n[1][0] + n[1][1]; }
  PairTable frequencies() const { return table_from_counts(n); }
};

// Multinomial draw of `shots` outcomes from `table`.
ContextCounts sample_table(const PairTable& table, std::uint64_t shots, Rng& rng);

// Simulated joint measurement of two orthogonal projectors. Throws
// ParameterError for shots == 0 and IncompatibleContextError when a and b
// are not orthogonal.
ContextCounts sample_context(const PureState& state, const Projector& a, const Projector& b,
                             std::uint64_t shots, std::uint64_t seed);

// One ContextCounts per cyclic edge, in evaluate_c_from_marginals order.
// Edge k uses the sub-seed mix_seed(seed, k).
std::vector<ContextCounts> sample_cycle(const PureState& state,
                                        std::span<const Projector> projectors,
                                        std::uint64_t shots_per_edge, std::uint64_t seed);

struct EstimateOptions {
  int bootstrap_resamples = 1000;
  std::uint64_t seed = 0;
  double confidence = 0.95;
  // First-order bias correction (K − 1) / 2N per entropy term.
  bool miller_madow = false;
};

struct CEstimate {
  double c_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  // True when the interval straddles 0.
  bool inconclusive = true;
  int resamples = 0;
};

// Plug-in H(first | second) from counts, optionally bias corrected.
double conditional_entropy_from_counts(const ContextCounts& counts, bool miller_madow = false);

// Plug-in estimate of the n-cycle quantity plus a percentile bootstrap
// interval. Resample b, edge k draws from mix_seed(mix_seed(seed, b), k), so
// the result does not depend on evaluation order. Throws ValidationError for
// fewer than 3 edges or an edge without shots.
CEstimate estimate_c(std::span<const ContextCounts> edge_counts, const EstimateOptions& options = {});

}  // namespace ectx
