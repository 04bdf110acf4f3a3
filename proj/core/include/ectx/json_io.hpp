#pragma once

// JSON and CSV forms of the library's values.
//
//   config:       {"state": [[re,im] x3], "projectors": [[[re,im] x3] x5]}
//   joint dist:   {"variables": [v...], "table": {"0110": p, ...}}
//                 (character k of each key is the outcome of variables[k])
//   problem:      {"n": N, "edges": [[u,v],...], "tables": [[[p00,p01],[p10,p11]],...]}
//   graph:        {"vertex_count": N, "edges": [[u,v],...], "cliques": [[...],...]}
//   counts:       [[n00,n01],[n10,n11]]
//
// Readers throw FormatError for schema problems; invariant failures
// (normalization, orthogonality) surface as ValidationError subclasses.

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "ectx/entropy.hpp"
#include "ectx/feasibility.hpp"
#include "ectx/jpd_graph.hpp"
#include "ectx/kcbs.hpp"
#include "ectx/optimizer.hpp"
#include "ectx/quantum.hpp"
#include "ectx/sampler.hpp"

namespace ectx {

using Json = nlohmann::json;

// x rounded to `digits` significant decimal digits.
double round_significant(double x, int digits);
// Shortest decimal form with at most `digits` significant digits.
std::string format_number(double x, int digits = 12);

Json to_json(const Vec3& v);
Vec3 vec3_from_json(const Json& j);

Json to_json(const PentagonConfig& config);
PentagonConfig config_from_json(const Json& j);

Json to_json(const JointDistribution& jpd);
JointDistribution joint_distribution_from_json(const Json& j);

Json to_json(const CommutationGraph& graph);
CommutationGraph graph_from_json(const Json& j);

Json to_json(const PairTable& table);
PairTable pair_table_from_json(const Json& j);

Json to_json(const FeasibilityProblem& problem);
FeasibilityProblem feasibility_problem_from_json(const Json& j);
Json to_json(const FeasibilityResult& result);

Json to_json(const EntropyReport& report);
Json to_json(const KcbsValue& value);
Json to_json(const SymmetryFlags& flags);

Json to_json(const ContextCounts& counts);
ContextCounts counts_from_json(const Json& j);
Json to_json(const CEstimate& estimate);

// Parses text, mapping parse failures to FormatError.
Json parse_json(const std::string& text);

// theta,phi,C header then one row per node, 12 significant digits.
void write_grid_csv(std::ostream& out, const Grid& grid);

}  // namespace ectx
