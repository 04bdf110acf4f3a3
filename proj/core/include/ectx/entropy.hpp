#pragma once

#include <array>
#include <span>

#include "ectx/quantum.hpp"
#include "ectx/tables.hpp"

namespace ectx {

// Shannon entropy in bits. Entries below tol::kZeroProbability count as 0
// (0·log 0 = 0). Throws ValidationError for an invalid distribution.
double shannon_entropy(std::span<const double> probabilities);

double joint_entropy(const PairTable& joint);

// H(first | second) = Σ_b p(second = b) H(first | second = b), in bits.
// Terms with p(second = b) = 0 contribute 0.
double conditional_entropy(const PairTable& joint);

// Terms of the entropic inequality for a five-projector cycle.
struct EntropyReport {
  double h_a1_given_a5 = 0.0;
  // H(A1|A2), H(A2|A3), H(A3|A4), H(A4|A5)
  std::array<double, 4> rhs_terms{};
  // h_a1_given_a5 − Σ rhs_terms; positive values certify contextuality.
  double c_value = 0.0;
};

EntropyReport evaluate_c(const PentagonConfig& config);

// n-cycle form H(A_1|A_n) − Σ_{i<n} H(A_i|A_{i+1}). Tables are for the edges
// (1,2), (2,3), ..., (n-1,n), (1,n); table i has A_i first, and the last
// table has A_1 first. Needs n >= 3.
double evaluate_c_from_marginals(std::span<const PairTable> tables);

// True iff ψ lies in span{a, b} within tol::kOrthogonal; a and b must be
// orthogonal (IncompatibleContextError otherwise). When true,
// H(A|B) <= 1e-9 for the pair.
bool coplanar_conditional_entropy_zero(const PureState& state, const Projector& a,
                                       const Projector& b);

}  // namespace ectx
