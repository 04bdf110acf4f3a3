#include "ectx/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ectx/entropy.hpp"
#include "ectx/error.hpp"

namespace ectx {

namespace {

std::uint64_t draw_binomial(std::uint64_t trials, double p, Rng& rng) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::binomial_distribution<std::uint64_t> dist(trials, p);
  return dist(rng);
}

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double cycle_value(std::span<const ContextCounts> counts, bool miller_madow) {
  const std::size_t n = counts.size();
  double c = conditional_entropy_from_counts(counts[n - 1], miller_madow);
  for (std::size_t i = 0; i + 1 < n; ++i) c -= conditional_entropy_from_counts(counts[i], miller_madow);
  return c;
}

}  // namespace

ContextCounts sample_table(const PairTable& table, std::uint64_t shots, Rng& rng) {
  const PairTable t = validated(table);
  const std::array<std::pair<int, int>, 4> cells{{{1, 0}, {0, 1}, {1, 1}, {0, 0}}};
  ContextCounts out;
  std::uint64_t remaining = shots;
  double remaining_mass = 1.0;
  for (std::size_t k = 0; k + 1 < cells.size(); ++k) {
    const auto [a, b] = cells[k];
    const double p = remaining_mass > 0.0 ? t.p[a][b] / remaining_mass : 0.0;
    const std::uint64_t drawn = draw_binomial(remaining, std::clamp(p, 0.0, 1.0), rng);
    out.n[a][b] = static_cast<double>(drawn);
    remaining -= drawn;
    remaining_mass -= t.p[a][b];
  }
  out.n[0][0] = static_cast<double>(remaining);
  return out;
}

ContextCounts sample_context(const PureState& state, const Projector& a, const Projector& b,
                             std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ParameterError("n_shots must be >= 1");
  const PairTable table = pair_joint_distribution(state, a, b);
  Rng rng(seed);
  return sample_table(table, shots, rng);
}

std::vector<ContextCounts> sample_cycle(const PureState& state,
                                        std::span<const Projector> projectors,
                                        std::uint64_t shots_per_edge, std::uint64_t seed) {
  if (shots_per_edge == 0) throw ParameterError("n_shots must be >= 1");
  const auto tables = cyclic_pair_tables(state, projectors);
  std::vector<ContextCounts> counts;
  counts.reserve(tables.size());
  for (std::size_t k = 0; k < tables.size(); ++k) {
    Rng rng(mix_seed(seed, k));
    counts.push_back(sample_table(tables[k], shots_per_edge, rng));
  }
  return counts;
}

double conditional_entropy_from_counts(const ContextCounts& counts, bool miller_madow) {
  const PairTable t = counts.frequencies();
  double h = conditional_entropy(t);
  if (miller_madow) {
    int joint_cells = 0;
    int second_cells = 0;
    for (int b = 0; b < 2; ++b) {
      const double column = counts.n[0][b] + counts.n[1][b];
      if (column > 0.0) ++second_cells;
      for (int a = 0; a < 2; ++a) {
        if (counts.n[a][b] > 0.0) ++joint_cells;
      }
    }
    h += static_cast<double>(joint_cells - second_cells) /
         (2.0 * counts.total() * std::numbers::ln2);
  }
  return h;
}

CEstimate estimate_c(std::span<const ContextCounts> edge_counts, const EstimateOptions& options) {
  if (edge_counts.size() < 3) throw ValidationError("need counts for at least 3 cyclic edges");
  for (const auto& c : edge_counts) {
    if (!(c.total() >= 1.0)) throw ValidationError("every edge needs at least one shot");
  }
  if (options.bootstrap_resamples < 0) throw ParameterError("bootstrap_resamples must be >= 0");
  if (!(options.confidence > 0.0 && options.confidence < 1.0)) {
    throw ParameterError("confidence must lie in (0, 1)");
  }

  CEstimate est;
  est.c_hat = cycle_value(edge_counts, options.miller_madow);
  est.ci_low = est.ci_high = est.c_hat;
  est.resamples = options.bootstrap_resamples;
  if (options.bootstrap_resamples > 0) {
    std::vector<double> values;
    values.reserve(options.bootstrap_resamples);
    std::vector<ContextCounts> resampled(edge_counts.size());
    for (int b = 0; b < options.bootstrap_resamples; ++b) {
      const std::uint64_t resample_seed = mix_seed(options.seed, static_cast<std::uint64_t>(b));
      for (std::size_t k = 0; k < edge_counts.size(); ++k) {
        Rng rng(mix_seed(resample_seed, k));
        const auto shots = static_cast<std::uint64_t>(std::llround(edge_counts[k].total()));
        resampled[k] = sample_table(edge_counts[k].frequencies(), shots, rng);
      }
      values.push_back(cycle_value(resampled, options.miller_madow));
    }
    std::sort(values.begin(), values.end());
    const double alpha = 1.0 - options.confidence;
    est.ci_low = quantile(values, alpha / 2.0);
    est.ci_high = quantile(values, 1.0 - alpha / 2.0);
  }
  est.inconclusive = est.ci_low <= 0.0 && est.ci_high >= 0.0;
  return est;
}

}  // namespace ectx
