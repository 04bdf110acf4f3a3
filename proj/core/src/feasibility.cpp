#include "ectx/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ectx/error.hpp"
#include "ectx/simplex.hpp"
#include "ectx/tolerance.hpp"

namespace ectx {

namespace {

// Row-reduces [A | b] to a full-row-rank system. Returns false when a zero
// row with non-zero right-hand side shows up (the system is inconsistent).
bool reduce_rows(Eigen::MatrixXd& a, Eigen::VectorXd& b) {
  const double eps = 1e-10;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot_row;
    const double best = a.col(col).tail(a.rows() - rank).cwiseAbs().maxCoeff(&pivot_row);
    if (best <= eps) continue;
    pivot_row += rank;
    a.row(rank).swap(a.row(pivot_row));
    std::swap(b[rank], b[pivot_row]);
    const double inv = 1.0 / a(rank, col);
    a.row(rank) *= inv;
    b[rank] *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == rank) continue;
      const double f = a(i, col);
      if (f == 0.0) continue;
      a.row(i) -= f * a.row(rank);
      b[i] -= f * b[rank];
    }
    ++rank;
  }
  for (Eigen::Index i = rank; i < a.rows(); ++i) {
    if (std::abs(b[i]) > 1e-9) return false;
  }
  a.conservativeResize(rank, Eigen::NoChange);
  b.conservativeResize(rank);
  return true;
}

}  // namespace

std::string to_string(FeasibilityStatus status) {
  return status == FeasibilityStatus::feasible ? "feasible" : "infeasible";
}

void validate(const FeasibilityProblem& problem) {
  if (problem.n < 1 || problem.n > FeasibilityProblem::kMaxVariables) {
    throw ValidationError("feasibility problems support 1.." +
                          std::to_string(FeasibilityProblem::kMaxVariables) + " variables");
  }
  if (problem.tables.size() != problem.edges.size()) {
    throw ValidationError("need exactly one table per edge");
  }
  for (std::size_t k = 0; k < problem.edges.size(); ++k) {
    const Edge& e = problem.edges[k];
    if (e.u < 0 || e.v < 0 || e.u >= problem.n || e.v >= problem.n || e.u == e.v) {
      throw ValidationError("invalid edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    validated(problem.tables[k]);
  }
}

MarginalConstraints marginal_constraints(const FeasibilityProblem& problem) {
  validate(problem);
  const Eigen::Index columns = Eigen::Index{1} << problem.n;
  const Eigen::Index rows = 1 + 4 * static_cast<Eigen::Index>(problem.edges.size());
  MarginalConstraints c{Eigen::MatrixXd::Zero(rows, columns), std::vector<double>(rows, 0.0)};
  c.a.row(0).setOnes();
  c.b[0] = 1.0;
  for (std::size_t k = 0; k < problem.edges.size(); ++k) {
    const Edge& e = problem.edges[k];
    const PairTable t = validated(problem.tables[k]);
    const Eigen::Index base = 1 + 4 * static_cast<Eigen::Index>(k);
    for (Eigen::Index q = 0; q < columns; ++q) {
      const int x = static_cast<int>((q >> e.u) & 1);
      const int y = static_cast<int>((q >> e.v) & 1);
      c.a(base + 2 * x + y, q) = 1.0;
    }
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) c.b[base + 2 * x + y] = t.p[x][y];
    }
  }
  return c;
}

double max_marginal_error(const JointDistribution& jpd, const FeasibilityProblem& problem) {
  double worst = 0.0;
  for (std::size_t k = 0; k < problem.edges.size(); ++k) {
    const Edge& e = problem.edges[k];
    worst = std::max(worst, max_abs_difference(pair_marginal(jpd, e.u, e.v), problem.tables[k]));
  }
  return worst;
}

FeasibilityResult jpd_exists(const FeasibilityProblem& problem) {
  const MarginalConstraints c = marginal_constraints(problem);
  const Phase1Result lp = solve_phase1(c.a, c.b);

  FeasibilityResult result;
  result.residual = lp.residual;
  result.iterations = lp.iterations;
  result.status = lp.feasible ? FeasibilityStatus::feasible : FeasibilityStatus::infeasible;
  if (lp.feasible) {
    std::vector<double> q = lp.x;
    const double mass = std::accumulate(q.begin(), q.end(), 0.0);
    for (double& v : q) v /= mass;
    std::vector<int> vars(problem.n);
    std::iota(vars.begin(), vars.end(), 0);
    result.witness.emplace(std::move(vars), std::move(q));
    result.witness_error = max_marginal_error(*result.witness, problem);
  } else {
    result.certificate = lp.farkas;
  }
  return result;
}

FeasibilityStatus brute_force_feasibility_oracle(const FeasibilityProblem& problem) {
  if (problem.n > 4) throw ParameterError("brute-force oracle supports n <= 4");
  const MarginalConstraints c = marginal_constraints(problem);
  Eigen::MatrixXd a = c.a;
  Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(c.b.data(), c.b.size());
  if (!reduce_rows(a, b)) return FeasibilityStatus::infeasible;

  const int rank = static_cast<int>(a.rows());
  const int columns = static_cast<int>(a.cols());
  const Eigen::VectorXd full_b = Eigen::Map<const Eigen::VectorXd>(c.b.data(), c.b.size());

  // Walk every rank-sized column subset in lexicographic order.
  std::vector<int> pick(rank);
  std::iota(pick.begin(), pick.end(), 0);
  Eigen::MatrixXd square(rank, rank);
  while (true) {
    for (int k = 0; k < rank; ++k) square.col(k) = a.col(pick[k]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(square);
    if (lu.rank() == rank) {
      const Eigen::VectorXd x = lu.solve(b);
      if (x.minCoeff() >= -1e-9) {
        Eigen::VectorXd q = Eigen::VectorXd::Zero(columns);
        for (int k = 0; k < rank; ++k) q[pick[k]] = x[k];
        if ((c.a * q - full_b).cwiseAbs().maxCoeff() <= 1e-9) return FeasibilityStatus::feasible;
      }
    }
    int k = rank - 1;
    while (k >= 0 && pick[k] == columns - rank + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int j = k + 1; j < rank; ++j) pick[j] = pick[j - 1] + 1;
  }
  return FeasibilityStatus::infeasible;
}

FeasibilityProblem problem_from_config(const PentagonConfig& config) {
  validate(config);
  FeasibilityProblem p;
  p.n = 5;
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;
    p.edges.push_back(Edge{i, j});
    p.tables.push_back(
        pair_joint_distribution(config.state, config.projectors[i], config.projectors[j]));
  }
  return p;
}

FeasibilityProblem problem_from_jpd(const JointDistribution& jpd, const CommutationGraph& graph) {
  FeasibilityProblem p;
  p.n = graph.vertex_count();
  for (const Edge& e : graph.edges()) {
    p.edges.push_back(e);
    p.tables.push_back(pair_marginal(jpd, e.u, e.v));
  }
  return p;
}

FeasibilityProblem problem_from_marginals(const PairwiseMarginals& marginals, int n) {
  FeasibilityProblem p;
  p.n = n;
  for (const auto& [e, t] : marginals.edges) {
    p.edges.push_back(e);
    p.tables.push_back(t);
  }
  return p;
}

}  // namespace ectx
