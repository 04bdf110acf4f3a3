#include "ectx/entropy.hpp"

#include <cmath>
#include <string>

#include "ectx/error.hpp"
#include "ectx/tolerance.hpp"

namespace ectx {

namespace {

double plogp(double p) {
  return p < tol::kZeroProbability ? 0.0 : -p * std::log2(p);
}

double binary_entropy_of(double a, double b) {
  const double total = a + b;
  if (total < tol::kZeroProbability) return 0.0;
  return plogp(a / total) + plogp(b / total);
}

}  // namespace

double shannon_entropy(std::span<const double> probabilities) {
  validate_distribution(probabilities);
  double h = 0.0;
  for (double p : probabilities) h += plogp(p);
  return h;
}

double joint_entropy(const PairTable& joint) {
  const PairTable t = validated(joint);
  return plogp(t.p[0][0]) + plogp(t.p[0][1]) + plogp(t.p[1][0]) + plogp(t.p[1][1]);
}

double conditional_entropy(const PairTable& joint) {
  const PairTable t = validated(joint);
  double h = 0.0;
  for (int b = 0; b < 2; ++b) {
    const double pb = t.p[0][b] + t.p[1][b];
    if (pb < tol::kZeroProbability) continue;
    h += pb * binary_entropy_of(t.p[0][b], t.p[1][b]);
  }
  return h;
}

double evaluate_c_from_marginals(std::span<const PairTable> tables) {
  const std::size_t n = tables.size();
  if (n < 3) throw ValidationError("cycle needs at least 3 edge tables, got " + std::to_string(n));
  double c = conditional_entropy(tables[n - 1]);
  for (std::size_t i = 0; i + 1 < n; ++i) c -= conditional_entropy(tables[i]);
  return c;
}

EntropyReport evaluate_c(const PentagonConfig& config) {
  validate(config);
  const auto tables = cyclic_pair_tables(config.state, config.projectors);
  EntropyReport report;
  report.h_a1_given_a5 = conditional_entropy(tables[4]);
  double rhs = 0.0;
  for (int i = 0; i < 4; ++i) {
    report.rhs_terms[i] = conditional_entropy(tables[i]);
    rhs += report.rhs_terms[i];
  }
  report.c_value = report.h_a1_given_a5 - rhs;
  return report;
}

bool coplanar_conditional_entropy_zero(const PureState& state, const Projector& a,
                                       const Projector& b) {
  if (overlap(a.vec(), b.vec()) > tol::kOrthogonal) {
    throw IncompatibleContextError("coplanarity test needs orthogonal projectors");
  }
  const Vec3& psi = state.vec();
  const Vec3 residual = psi - a.vec().dot(psi) * a.vec() - b.vec().dot(psi) * b.vec();
  return residual.norm() <= tol::kOrthogonal;
}

}  // namespace ectx
