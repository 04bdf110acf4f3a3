#pragma once

// Commutation graphs and explicit joint distributions over binary outcomes.
//
// Vertices are observables, edges join jointly measurable pairs. For graphs
// with no cycles (and, more generally, trees of cliques glued at single
// vertices) a global joint distribution reproducing every measurable
// marginal can be written down as a product of edge/clique tables divided by
// the shared-vertex marginals.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ectx/quantum.hpp"
#include "ectx/tables.hpp"

namespace ectx {

// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

class CommutationGraph {
 public:
  // Throws ValidationError for out-of-range vertices, self-loops, duplicate
  // edges, or a listed clique that is not fully connected.
  CommutationGraph(int vertex_count, std::vector<Edge> edges,
                   std::vector<std::vector<int>> cliques = {});

  static CommutationGraph cycle(int n);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& cliques() const { return cliques_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(int a, int b) const;
  bool is_acyclic() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> cliques_;
  std::vector<std::vector<int>> adjacency_;
};

enum class GraphKind {
  empty,            // no edges
  tree_or_forest,   // no cycles
  clique_tree,      // every block is a clique, blocks glued at single vertices
  chordless_cycle,  // has an induced cycle of length >= 4
  unsupported,      // chordal, but needs separators of two or more vertices
};

std::string to_string(GraphKind kind);

struct GraphClassification {
  GraphKind kind = GraphKind::empty;
  // Shortest induced cycle of length >= 4, in traversal order (chordless_cycle only).
  std::vector<int> witness_cycle;
  // Maximal cliques (sorted vertex lists) for tree_or_forest and clique_tree.
  std::vector<std::vector<int>> blocks;
};

GraphClassification classify_graph(const CommutationGraph& graph);

// Table over binary outcome tuples. Bit k of a table index is the outcome of
// variables()[k].
class JointDistribution {
 public:
  static constexpr int kMaxVariables = 20;

  // Clips entries in [-1e-12, 0) to 0; throws ValidationError for size
  // mismatch, duplicates, negative entries or mass off by more than 1e-9.
  JointDistribution(std::vector<int> variables, std::vector<double> table);

  const std::vector<int>& variables() const { return variables_; }
  const std::vector<double>& table() const { return table_; }
  int variable_count() const { return static_cast<int>(variables_.size()); }
  double probability(std::uint64_t index) const { return table_.at(index); }
  // Position of a vertex in variables(), or -1.
  int position_of(int vertex) const;

 private:
  std::vector<int> variables_;
  std::vector<double> table_;
};

// Distribution over `subset` (in the given order), summing out everything
// else. Throws ValidationError for unknown or repeated variables.
JointDistribution marginalize(const JointDistribution& jpd, std::span<const int> subset);

JointDistribution sum_out(const JointDistribution& jpd, int vertex);

// Sums out the listed vertices one at a time, in order.
JointDistribution sum_out_in_order(const JointDistribution& jpd, std::span<const int> order);

// Order in which to sum out every vertex not in `keep` so that each removed
// vertex is a leaf of what remains; among current leaves the largest index
// goes first. Throws StructureError if the graph has a cycle.
std::vector<int> leaf_first_order(const CommutationGraph& tree, std::span<const int> keep);

PairTable pair_marginal(const JointDistribution& jpd, int first, int second);

// Dirichlet(1,...,1) table over variables 0..n-1, deterministic per seed.
// Throws ParameterError unless 1 <= n <= 12.
JointDistribution random_jpd(int n, std::uint64_t seed);

// Per-edge tables (oriented [outcome of u][outcome of v] with u < v) and
// per-vertex single-variable distributions.
struct PairwiseMarginals {
  std::map<Edge, PairTable> edges;
  std::map<int, std::array<double, 2>> vertices;

  // Stores t as p(first, second) regardless of vertex order.
  void set_edge(int first, int second, const PairTable& t);
  // Table oriented as p(first, second). Throws ValidationError if absent.
  PairTable edge(int first, int second) const;
};

PairwiseMarginals pairwise_marginals(const JointDistribution& jpd, const CommutationGraph& graph);

// Born-rule tables for every edge; projectors[v] belongs to vertex v.
PairwiseMarginals quantum_marginals(const PureState& state, std::span<const Projector> projectors,
                                    const CommutationGraph& graph);

// Fills in vertex marginals implied by the edge tables and checks that every
// pair of tables sharing a vertex agrees within 1e-9 (InconsistencyError
// otherwise). Every edge must have a table; isolated vertices need an
// explicit vertex entry.
PairwiseMarginals with_vertex_marginals(const PairwiseMarginals& marginals,
                                        const CommutationGraph& graph);

// ∏_{edges} p(A_i, A_j) / ∏_{vertices} p(A_i)^{d(i)-1} over variables
// 0..N-1. Tuples through a zero-probability separator value get 0.
// Throws StructureError when the graph has a cycle.
JointDistribution build_tree_jpd(const CommutationGraph& graph,
                                 const PairwiseMarginals& marginals);

// Product of clique distributions divided by the marginal of each vertex
// once per extra clique containing it. Each distribution is over one clique
// (its variables are vertex ids). The cliques must cover every vertex and
// edge, and their vertex/clique incidence graph must be a forest.
JointDistribution build_clique_tree_jpd(const CommutationGraph& graph,
                                        std::span<const JointDistribution> clique_distributions);

}  // namespace ectx
