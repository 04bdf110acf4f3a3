#pragma once

// Does a single joint distribution over all observables reproduce a given
// set of pairwise tables? This is the operational definition of a
// noncontextual model; it is decided here as an LP feasibility problem over
// the 2^n outcome tuples.

#include <optional>
#include <string>
#include <vector>

#include "ectx/jpd_graph.hpp"
#include "ectx/quantum.hpp"
#include "ectx/tables.hpp"

namespace ectx {

struct FeasibilityProblem {
  static constexpr int kMaxVariables = 12;

  int n = 0;
  // Each edge is (first, second) as written; tables[k] is p(first, second).
  std::vector<Edge> edges;
  std::vector<PairTable> tables;
};

// Throws ValidationError for n outside [1, 12], bad vertex ids, self-loops,
// mismatched table count or non-normalized tables.
void validate(const FeasibilityProblem& problem);

enum class FeasibilityStatus { feasible, infeasible };

std::string to_string(FeasibilityStatus status);

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::infeasible;
  std::optional<JointDistribution> witness;
  // Phase-1 objective: 0 when feasible, > 1e-7 when infeasible.
  double residual = 0.0;
  // Largest deviation of the witness marginals from the input tables.
  double witness_error = 0.0;
  // Farkas multipliers for the rows [Σq = 1, then 4 rows per edge in
  // (0,0), (0,1), (1,0), (1,1) order]; present only when infeasible.
  std::vector<double> certificate;
  int iterations = 0;
};

FeasibilityResult jpd_exists(const FeasibilityProblem& problem);

// Independent check for n <= 4 by enumerating every basis of the reduced
// constraint system (a feasible LP always has a basic feasible solution).
// Throws ParameterError for n > 4.
FeasibilityStatus brute_force_feasibility_oracle(const FeasibilityProblem& problem);

// Constraint matrix and right-hand side in the row order documented on
// FeasibilityResult::certificate.
struct MarginalConstraints {
  Eigen::MatrixXd a;
  std::vector<double> b;
};
MarginalConstraints marginal_constraints(const FeasibilityProblem& problem);

// Largest |marginal(jpd) − table| over the problem's edges.
double max_marginal_error(const JointDistribution& jpd, const FeasibilityProblem& problem);

FeasibilityProblem problem_from_config(const PentagonConfig& config);
FeasibilityProblem problem_from_jpd(const JointDistribution& jpd, const CommutationGraph& graph);
FeasibilityProblem problem_from_marginals(const PairwiseMarginals& marginals, int n);

}  // namespace ectx
