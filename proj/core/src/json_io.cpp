#include "ectx/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "ectx/error.hpp"

namespace ectx {

namespace {

// Runs a reader, turning nlohmann's access/type errors into FormatError.
template <typename F>
auto guarded(const char* what, F&& read) {
  try {
    return read();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json number(double x, int digits = 12) { return round_significant(x, digits); }

}  // namespace

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

Json to_json(const Vec3& v) {
  Json out = Json::array();
  for (int i = 0; i < 3; ++i) out.push_back({v[i].real(), v[i].imag()});
  return out;
}

Vec3 vec3_from_json(const Json& j) {
  return guarded("vector", [&] {
    if (!j.is_array() || j.size() != 3) throw FormatError("vector must have 3 components");
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
      const Json& c = j.at(i);
      if (!c.is_array() || c.size() != 2) throw FormatError("amplitude must be [re, im]");
      v[i] = {c.at(0).get<double>(), c.at(1).get<double>()};
    }
    return v;
  });
}

Json to_json(const PentagonConfig& config) {
  Json projectors = Json::array();
  for (const auto& p : config.projectors) projectors.push_back(to_json(p.vec()));
  return Json{{"state", to_json(config.state.vec())}, {"projectors", projectors}};
}

PentagonConfig config_from_json(const Json& j) {
  auto [state, vectors] = guarded("config", [&] {
    if (!j.is_object()) throw FormatError("config must be an object");
    const Json& ps = j.at("projectors");
    if (!ps.is_array() || ps.size() != 5) throw FormatError("config needs exactly 5 projectors");
    std::array<Vec3, 5> vs;
    for (int i = 0; i < 5; ++i) vs[i] = vec3_from_json(ps.at(i));
    return std::pair{vec3_from_json(j.at("state")), vs};
  });
  PentagonConfig config{PureState(state),
                        {Projector(vectors[0]), Projector(vectors[1]), Projector(vectors[2]),
                         Projector(vectors[3]), Projector(vectors[4])}};
  validate(config);
  return config;
}

Json to_json(const JointDistribution& jpd) {
  Json table = Json::object();
  const int n = jpd.variable_count();
  for (std::size_t index = 0; index < jpd.table().size(); ++index) {
    std::string key(n, '0');
    for (int k = 0; k < n; ++k) {
      if ((index >> k) & 1u) key[k] = '1';
    }
    table[key] = jpd.table()[index];
  }
  return Json{{"variables", jpd.variables()}, {"table", table}};
}

JointDistribution joint_distribution_from_json(const Json& j) {
  auto [vars, table] = guarded("joint distribution", [&] {
    auto vars = j.at("variables").get<std::vector<int>>();
    if (vars.size() > static_cast<std::size_t>(JointDistribution::kMaxVariables)) {
      throw FormatError("too many variables");
    }
    std::vector<double> table(std::size_t{1} << vars.size(), 0.0);
    for (const auto& [key, value] : j.at("table").items()) {
      if (key.size() != vars.size()) throw FormatError("outcome key '" + key + "' has wrong length");
      std::size_t index = 0;
      for (std::size_t k = 0; k < key.size(); ++k) {
        if (key[k] == '1') {
          index |= std::size_t{1} << k;
        } else if (key[k] != '0') {
          throw FormatError("outcome key '" + key + "' is not a bit-string");
        }
      }
      table[index] = value.get<double>();
    }
    return std::pair{vars, table};
  });
  return JointDistribution(std::move(vars), std::move(table));
}

Json to_json(const CommutationGraph& graph) {
  Json edges = Json::array();
  for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v});
  return Json{{"vertex_count", graph.vertex_count()}, {"edges", edges}, {"cliques", graph.cliques()}};
}

CommutationGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    std::vector<std::vector<int>> cliques;
    if (j.contains("cliques")) cliques = j.at("cliques").get<std::vector<std::vector<int>>>();
    return CommutationGraph(j.at("vertex_count").get<int>(), std::move(edges), std::move(cliques));
  });
}

Json to_json(const PairTable& table) {
  return Json{{table.p[0][0], table.p[0][1]}, {table.p[1][0], table.p[1][1]}};
}

PairTable pair_table_from_json(const Json& j) {
  return guarded("pair table", [&] {
    if (!j.is_array() || j.size() != 2 || j.at(0).size() != 2 || j.at(1).size() != 2) {
      throw FormatError("pair table must be [[p00,p01],[p10,p11]]");
    }
    PairTable t;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) t.p[a][b] = j.at(a).at(b).get<double>();
    }
    return t;
  });
}

Json to_json(const FeasibilityProblem& problem) {
  Json edges = Json::array();
  Json tables = Json::array();
  for (std::size_t k = 0; k < problem.edges.size(); ++k) {
    edges.push_back({problem.edges[k].u, problem.edges[k].v});
    tables.push_back(to_json(problem.tables[k]));
  }
  return Json{{"n", problem.n}, {"edges", edges}, {"tables", tables}};
}

FeasibilityProblem feasibility_problem_from_json(const Json& j) {
  FeasibilityProblem p = guarded("feasibility problem", [&] {
    FeasibilityProblem p;
    p.n = j.at("n").get<int>();
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("edge must be [u, v]");
      p.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    for (const Json& t : j.at("tables")) p.tables.push_back(pair_table_from_json(t));
    return p;
  });
  validate(p);
  return p;
}

Json to_json(const FeasibilityResult& result) {
  Json out{{"status", to_string(result.status)},
           {"residual", number(result.residual, 3)},
           {"iterations", result.iterations}};
  if (result.witness) {
    out["witness"] = to_json(*result.witness);
    out["witness_error"] = number(result.witness_error, 3);
  } else {
    out["witness"] = nullptr;
  }
  if (!result.certificate.empty()) {
    Json cert = Json::array();
    for (double y : result.certificate) cert.push_back(number(y));
    out["certificate"] = cert;
  }
  return out;
}

Json to_json(const EntropyReport& report) {
  return Json{{"h_a1_given_a5", number(report.h_a1_given_a5)},
              {"h_a1_given_a2", number(report.rhs_terms[0])},
              {"h_a2_given_a3", number(report.rhs_terms[1])},
              {"h_a3_given_a4", number(report.rhs_terms[2])},
              {"h_a4_given_a5", number(report.rhs_terms[3])},
              {"c_value", number(report.c_value)}};
}

Json to_json(const KcbsValue& value) {
  return Json{{"sum", number(value.sum)}, {"violation", number(value.violation)}};
}

Json to_json(const SymmetryFlags& flags) {
  return Json{{"state_overlap", flags.state_overlap},
              {"cross_overlap", flags.cross_overlap},
              {"axis_overlap", flags.axis_overlap}};
}

Json to_json(const ContextCounts& counts) {
  return Json{{counts.n[0][0], counts.n[0][1]}, {counts.n[1][0], counts.n[1][1]}};
}

ContextCounts counts_from_json(const Json& j) {
  return guarded("counts", [&] {
    if (!j.is_array() || j.size() != 2 || j.at(0).size() != 2 || j.at(1).size() != 2) {
      throw FormatError("counts must be [[n00,n01],[n10,n11]]");
    }
    ContextCounts c;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) c.n[a][b] = j.at(a).at(b).get<double>();
    }
    return c;
  });
}

Json to_json(const CEstimate& estimate) {
  return Json{{"c_hat", number(estimate.c_hat)},
              {"ci_low", number(estimate.ci_low)},
              {"ci_high", number(estimate.ci_high)},
              {"inconclusive", estimate.inconclusive},
              {"bootstrap_resamples", estimate.resamples}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

void write_grid_csv(std::ostream& out, const Grid& grid) {
  out << "theta,phi,C\n";
  for (const auto& p : grid.points) {
    out << format_number(p.theta) << ',' << format_number(p.phi) << ',' << format_number(p.c)
        << '\n';
  }
}

}  // namespace ectx
