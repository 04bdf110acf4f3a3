#include "ectx/jpd_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>

#include "ectx/error.hpp"
#include "ectx/random.hpp"
#include "ectx/tolerance.hpp"

namespace ectx {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // False if a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Shortest path from `from` to `to` avoiding blocked vertices (BFS).
std::vector<int> shortest_path(const CommutationGraph& g, int from, int to,
                               const std::vector<char>& blocked) {
  std::vector<int> prev(g.vertex_count(), -2);
  std::queue<int> q;
  q.push(from);
  prev[from] = -1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (x == to) break;
    for (int y : g.neighbors(x)) {
      if (blocked[y] || prev[y] != -2) continue;
      prev[y] = x;
      q.push(y);
    }
  }
  if (prev[to] == -2) return {};
  std::vector<int> path;
  for (int x = to; x != -1; x = prev[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// For every induced path a–b–c, the shortest a→c path avoiding b's other
// neighbours closes a chordless cycle; every chordless cycle of length >= 4
// arises this way, so the minimum over all (a, b, c) is the shortest one.
std::vector<int> shortest_chordless_cycle(const CommutationGraph& g) {
  std::vector<int> best;
  for (int b = 0; b < g.vertex_count(); ++b) {
    const auto& nb = g.neighbors(b);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const int a = nb[i];
        const int c = nb[j];
        if (g.has_edge(a, c)) continue;
        std::vector<char> blocked(g.vertex_count(), 0);
        blocked[b] = 1;
        for (int x : nb) {
          if (x != a && x != c) blocked[x] = 1;
        }
        auto path = shortest_path(g, a, c, blocked);
        if (path.empty()) continue;
        if (best.empty() || path.size() + 1 < best.size()) {
          best.clear();
          best.push_back(b);
          best.insert(best.end(), path.begin(), path.end());
        }
      }
    }
  }
  return best;
}

std::vector<int> common_neighbors(const CommutationGraph& g, int u, int v) {
  std::vector<int> out;
  std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                        g.neighbors(v).end(), std::back_inserter(out));
  return out;
}

std::vector<double> single_marginal(const JointDistribution& d, int vertex) {
  const int v[1] = {vertex};
  return marginalize(d, v).table();
}

}  // namespace

// ---------------------------------------------------------------------------
// CommutationGraph

CommutationGraph::CommutationGraph(int vertex_count, std::vector<Edge> edges,
                                   std::vector<std::vector<int>> cliques)
    : vertex_count_(vertex_count), cliques_(std::move(cliques)) {
  if (vertex_count < 0) throw ValidationError("negative vertex count");
  adjacency_.assign(vertex_count, {});
  std::set<Edge> seen;
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.v < 0 || raw.u >= vertex_count || raw.v >= vertex_count) {
      throw ValidationError("edge references a vertex outside [0, " +
                            std::to_string(vertex_count) + ")");
    }
    if (raw.u == raw.v) throw ValidationError("self-loop on vertex " + std::to_string(raw.u));
    const Edge e = Edge::of(raw.u, raw.v);
    if (!seen.insert(e).second) {
      throw ValidationError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    edges_.push_back(e);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  for (const auto& clique : cliques_) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (clique[i] < 0 || clique[i] >= vertex_count) {
        throw ValidationError("clique references an unknown vertex");
      }
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        if (!has_edge(clique[i], clique[j])) {
          throw ValidationError("listed clique is not fully connected");
        }
      }
    }
  }
}

CommutationGraph CommutationGraph::cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::of(i, (i + 1) % n));
  return CommutationGraph(n, std::move(edges));
}

bool CommutationGraph::has_edge(int a, int b) const {
  if (a < 0 || a >= vertex_count_) return false;
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

bool CommutationGraph::is_acyclic() const {
  DisjointSets sets(vertex_count_);
  for (const Edge& e : edges_) {
    if (!sets.unite(e.u, e.v)) return false;
  }
  return true;
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::empty: return "empty";
    case GraphKind::tree_or_forest: return "tree_or_forest";
    case GraphKind::clique_tree: return "clique_tree";
    case GraphKind::chordless_cycle: return "contains_chordless_cycle";
    case GraphKind::unsupported: return "unsupported";
  }
  return "unknown";
}

GraphClassification classify_graph(const CommutationGraph& graph) {
  GraphClassification out;
  if (graph.edges().empty()) return out;

  if (graph.is_acyclic()) {
    out.kind = GraphKind::tree_or_forest;
    for (const Edge& e : graph.edges()) out.blocks.push_back({e.u, e.v});
    return out;
  }

  out.witness_cycle = shortest_chordless_cycle(graph);
  if (!out.witness_cycle.empty()) {
    out.kind = GraphKind::chordless_cycle;
    return out;
  }

  // Chordal from here. Blocks are cliques exactly when no edge has two
  // non-adjacent common neighbours (no induced diamond).
  std::set<std::vector<int>> blocks;
  for (const Edge& e : graph.edges()) {
    auto common = common_neighbors(graph, e.u, e.v);
    for (std::size_t i = 0; i < common.size(); ++i) {
      for (std::size_t j = i + 1; j < common.size(); ++j) {
        if (!graph.has_edge(common[i], common[j])) {
          out.kind = GraphKind::unsupported;
          return out;
        }
      }
    }
    common.push_back(e.u);
    common.push_back(e.v);
    std::sort(common.begin(), common.end());
    blocks.insert(std::move(common));
  }
  out.kind = GraphKind::clique_tree;
  out.blocks.assign(blocks.begin(), blocks.end());
  return out;
}

// ---------------------------------------------------------------------------
// JointDistribution

JointDistribution::JointDistribution(std::vector<int> variables, std::vector<double> table)
    : variables_(std::move(variables)), table_(std::move(table)) {
  if (variables_.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw ValidationError("too many variables for an explicit table");
  }
  std::vector<int> sorted = variables_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("repeated variable in joint distribution");
  }
  if (table_.size() != (std::size_t{1} << variables_.size())) {
    throw ValidationError("table size " + std::to_string(table_.size()) + " does not match " +
                          std::to_string(variables_.size()) + " binary variables");
  }
  double mass = 0.0;
  for (double& p : table_) {
    if (!std::isfinite(p) || p < -tol::kNegative) {
      throw ValidationError("joint distribution has a negative or non-finite entry");
    }
    p = std::max(p, 0.0);
    mass += p;
  }
  if (std::abs(mass - 1.0) > tol::kMass) {
    throw ValidationError("joint distribution mass is " + std::to_string(mass));
  }
}

int JointDistribution::position_of(int vertex) const {
  auto it = std::find(variables_.begin(), variables_.end(), vertex);
  return it == variables_.end() ? -1 : static_cast<int>(it - variables_.begin());
}

JointDistribution marginalize(const JointDistribution& jpd, std::span<const int> subset) {
  std::vector<int> positions;
  positions.reserve(subset.size());
  for (int v : subset) {
    const int pos = jpd.position_of(v);
    if (pos < 0) throw ValidationError("unknown variable " + std::to_string(v));
    if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
      throw ValidationError("variable " + std::to_string(v) + " listed twice");
    }
    positions.push_back(pos);
  }
  std::vector<double> out(std::size_t{1} << positions.size(), 0.0);
  const auto& table = jpd.table();
  for (std::size_t index = 0; index < table.size(); ++index) {
    std::size_t target = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      target |= ((index >> positions[k]) & 1u) << k;
    }
    out[target] += table[index];
  }
  return JointDistribution(std::vector<int>(subset.begin(), subset.end()), std::move(out));
}

JointDistribution sum_out(const JointDistribution& jpd, int vertex) {
  if (jpd.position_of(vertex) < 0) throw ValidationError("unknown variable " + std::to_string(vertex));
  std::vector<int> keep;
  for (int v : jpd.variables()) {
    if (v != vertex) keep.push_back(v);
  }
  return marginalize(jpd, keep);
}

JointDistribution sum_out_in_order(const JointDistribution& jpd, std::span<const int> order) {
  JointDistribution current = jpd;
  for (int v : order) current = sum_out(current, v);
  return current;
}

std::vector<int> leaf_first_order(const CommutationGraph& tree, std::span<const int> keep) {
  if (!tree.is_acyclic()) throw StructureError("leaf-first order needs a forest");
  const int n = tree.vertex_count();
  std::vector<char> kept(n, 0);
  for (int v : keep) {
    if (v < 0 || v >= n) throw ValidationError("kept vertex out of range");
    kept[v] = 1;
  }
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) degree[v] = tree.degree(v);

  std::vector<int> order;
  while (true) {
    int pick = -1;
    for (int v = n - 1; v >= 0; --v) {
      if (!removed[v] && !kept[v] && degree[v] <= 1) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    removed[pick] = 1;
    order.push_back(pick);
    for (int w : tree.neighbors(pick)) {
      if (!removed[w]) --degree[w];
    }
  }
  // Whatever is left lies on paths between kept vertices; those are summed
  // last, in index order.
  for (int v = 0; v < n; ++v) {
    if (!removed[v] && !kept[v]) order.push_back(v);
  }
  return order;
}

PairTable pair_marginal(const JointDistribution& jpd, int first, int second) {
  const int vars[2] = {first, second};
  const auto m = marginalize(jpd, vars);
  PairTable t;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) t.p[a][b] = m.table()[a | (b << 1)];
  }
  return t;
}

JointDistribution random_jpd(int n, std::uint64_t seed) {
  if (n < 1 || n > 12) throw ParameterError("random_jpd needs 1 <= n <= 12");
  Rng rng(seed);
  std::vector<double> table(std::size_t{1} << n);
  double total = 0.0;
  for (double& p : table) {
    p = standard_exponential(rng);
    total += p;
  }
  for (double& p : table) p /= total;
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  return JointDistribution(std::move(vars), std::move(table));
}

// ---------------------------------------------------------------------------
// Pairwise marginals

void PairwiseMarginals::set_edge(int first, int second, const PairTable& t) {
  edges[Edge::of(first, second)] = first < second ? t : t.transposed();
}

PairTable PairwiseMarginals::edge(int first, int second) const {
  auto it = edges.find(Edge::of(first, second));
  if (it == edges.end()) {
    throw ValidationError("no table for edge " + std::to_string(first) + "-" +
                          std::to_string(second));
  }
  return first < second ? it->second : it->second.transposed();
}

PairwiseMarginals pairwise_marginals(const JointDistribution& jpd, const CommutationGraph& graph) {
  PairwiseMarginals m;
  for (const Edge& e : graph.edges()) m.set_edge(e.u, e.v, pair_marginal(jpd, e.u, e.v));
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const auto t = single_marginal(jpd, v);
    m.vertices[v] = {t[0], t[1]};
  }
  return m;
}

PairwiseMarginals quantum_marginals(const PureState& state, std::span<const Projector> projectors,
                                    const CommutationGraph& graph) {
  if (projectors.size() != static_cast<std::size_t>(graph.vertex_count())) {
    throw ValidationError("need one projector per vertex");
  }
  PairwiseMarginals m;
  for (const Edge& e : graph.edges()) {
    m.set_edge(e.u, e.v, pair_joint_distribution(state, projectors[e.u], projectors[e.v]));
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const double p = outcome_probability(state, projectors[v]);
    m.vertices[v] = {1.0 - p, p};
  }
  return m;
}

PairwiseMarginals with_vertex_marginals(const PairwiseMarginals& marginals,
                                        const CommutationGraph& graph) {
  PairwiseMarginals out;
  out.vertices = marginals.vertices;
  auto record = [&](int v, const std::array<double, 2>& m) {
    auto [it, inserted] = out.vertices.try_emplace(v, m);
    if (inserted) return;
    const double diff = std::max(std::abs(it->second[0] - m[0]), std::abs(it->second[1] - m[1]));
    if (diff > tol::kConsistency) {
      throw InconsistencyError("marginals of vertex " + std::to_string(v) + " disagree by " +
                               std::to_string(diff));
    }
  };
  for (const Edge& e : graph.edges()) {
    const PairTable t = validated(marginals.edge(e.u, e.v));
    out.edges[e] = t;
    record(e.u, t.first_marginal());
    record(e.v, t.second_marginal());
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    auto it = out.vertices.find(v);
    if (it == out.vertices.end()) {
      throw ValidationError("no marginal for isolated vertex " + std::to_string(v));
    }
    const double pair[2] = {it->second[0], it->second[1]};
    validate_distribution(pair);
  }
  return out;
}

JointDistribution build_tree_jpd(const CommutationGraph& graph,
                                 const PairwiseMarginals& marginals) {
  if (!graph.is_acyclic()) throw StructureError("tree construction needs a cycle-free graph");
  const int n = graph.vertex_count();
  if (n < 1 || n > JointDistribution::kMaxVariables) {
    throw ValidationError("tree construction supports 1.." +
                          std::to_string(JointDistribution::kMaxVariables) + " vertices");
  }
  const PairwiseMarginals m = with_vertex_marginals(marginals, graph);

  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (std::size_t x = 0; x < table.size(); ++x) {
    auto bit = [x](int v) { return static_cast<int>((x >> v) & 1u); };
    double value = 1.0;
    for (const auto& [e, t] : m.edges) value *= t.p[bit(e.u)][bit(e.v)];
    for (int v = 0; v < n && value > 0.0; ++v) {
      const int d = graph.degree(v);
      const double pv = m.vertices.at(v)[bit(v)];
      if (d == 0) {
        value *= pv;
      } else if (d > 1) {
        value = pv < tol::kZeroProbability ? 0.0 : value / std::pow(pv, d - 1);
      }
    }
    table[x] = value;
  }
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  return JointDistribution(std::move(vars), std::move(table));
}

JointDistribution build_clique_tree_jpd(const CommutationGraph& graph,
                                        std::span<const JointDistribution> clique_distributions) {
  const int n = graph.vertex_count();
  if (n < 1 || n > JointDistribution::kMaxVariables) {
    throw ValidationError("clique-tree construction supports 1.." +
                          std::to_string(JointDistribution::kMaxVariables) + " vertices");
  }
  const int cliques = static_cast<int>(clique_distributions.size());

  // Vertex/clique incidence graph on n + cliques nodes must be a forest.
  DisjointSets incidence(n + cliques);
  std::vector<int> membership(n, 0);
  std::set<Edge> covered;
  for (int c = 0; c < cliques; ++c) {
    const auto& vars = clique_distributions[c].variables();
    if (vars.empty()) throw StructureError("empty clique distribution");
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] < 0 || vars[i] >= n) throw ValidationError("clique references unknown vertex");
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        if (!graph.has_edge(vars[i], vars[j])) {
          throw StructureError("clique distribution spans non-commuting vertices " +
                               std::to_string(vars[i]) + " and " + std::to_string(vars[j]));
        }
        covered.insert(Edge::of(vars[i], vars[j]));
      }
      ++membership[vars[i]];
      if (!incidence.unite(vars[i], n + c)) {
        throw StructureError("cliques do not form a tree with single-vertex separators");
      }
    }
  }
  for (const Edge& e : graph.edges()) {
    if (!covered.count(e)) {
      throw StructureError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                           " is not inside any clique distribution");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (membership[v] == 0) {
      throw StructureError("vertex " + std::to_string(v) + " is not covered by any clique");
    }
  }

  // Separator marginals, checked for agreement across every clique sharing them.
  std::vector<std::array<double, 2>> vertex_marginal(n);
  std::vector<char> have(n, 0);
  for (const auto& dist : clique_distributions) {
    for (int v : dist.variables()) {
      const auto m = single_marginal(dist, v);
      if (!have[v]) {
        vertex_marginal[v] = {m[0], m[1]};
        have[v] = 1;
      } else if (std::max(std::abs(m[0] - vertex_marginal[v][0]),
                          std::abs(m[1] - vertex_marginal[v][1])) > tol::kConsistency) {
        throw InconsistencyError("clique marginals disagree on vertex " + std::to_string(v));
      }
    }
  }

  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (std::size_t x = 0; x < table.size(); ++x) {
    double value = 1.0;
    for (const auto& dist : clique_distributions) {
      const auto& vars = dist.variables();
      std::size_t local = 0;
      for (std::size_t k = 0; k < vars.size(); ++k) local |= ((x >> vars[k]) & 1u) << k;
      value *= dist.probability(local);
    }
    for (int v = 0; v < n && value > 0.0; ++v) {
      if (membership[v] < 2) continue;
      const double pv = vertex_marginal[v][(x >> v) & 1u];
      value = pv < tol::kZeroProbability ? 0.0 : value / std::pow(pv, membership[v] - 1);
    }
    table[x] = value;
  }
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  return JointDistribution(std::move(vars), std::move(table));
}

}  // namespace ectx
