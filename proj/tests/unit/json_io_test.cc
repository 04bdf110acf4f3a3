#include <gtest/gtest.h>

#include <sstream>

#include "ectx/error.hpp"
#include "ectx/json_io.hpp"
#include "oracles.hpp"

namespace ectx {
namespace {

TEST(JsonConfig, RoundTripIsExact) {
  Rng rng(81);
  for (int trial = 0; trial < 300; ++trial) {
    const auto base = build_pentagon_family({uniform(rng, 0.0, 1.5), uniform(rng, 0.0, 0.78)});
    const auto config = rotate_to_state(base, PureState(testing::random_complex_unit(rng)));
    const auto text = to_json(config).dump();
    const auto back = config_from_json(parse_json(text));
    ASSERT_EQ(back.state.vec(), config.state.vec());
    for (int i = 0; i < 5; ++i) ASSERT_EQ(back.projectors[i].vec(), config.projectors[i].vec());
  }
}

TEST(JsonConfig, Schema) {
  const auto j = to_json(build_symmetric_pentagram());
  ASSERT_TRUE(j.at("state").is_array());
  EXPECT_EQ(j.at("state").size(), 3u);
  EXPECT_EQ(j.at("state").at(2), Json::array({1.0, 0.0}));
  EXPECT_EQ(j.at("projectors").size(), 5u);
}

TEST(JsonConfig, Errors) {
  EXPECT_THROW(parse_json("{\"state\": [1, 2"), FormatError);
  EXPECT_THROW(config_from_json(parse_json("[]")), FormatError);
  EXPECT_THROW(config_from_json(parse_json(R"({"state": [[1,0],[0,0],[0,0]]})")), FormatError);
  EXPECT_THROW(config_from_json(parse_json(R"({"state": [[1,0],[0,0]], "projectors": []})")),
               FormatError);
  EXPECT_THROW(config_from_json(parse_json(R"({"state": ["a","b","c"], "projectors": []})")),
               FormatError);

  // Well formed but not cyclically orthogonal.
  auto j = to_json(build_symmetric_pentagram());
  j["projectors"][1] = to_json(Vec3(0, 0, 1));
  EXPECT_THROW(config_from_json(j), IncompatibleContextError);

  // Well formed but not normalized.
  auto k = to_json(build_symmetric_pentagram());
  k["state"] = Json::array({Json::array({1.0, 0.0}), Json::array({1.0, 0.0}), Json::array({0.0, 0.0})});
  EXPECT_THROW(config_from_json(k), ValidationError);
}

TEST(JsonJointDistribution, KeyCharacterKIsVariableK) {
  const JointDistribution jpd({4, 9}, {0.1, 0.2, 0.3, 0.4});
  const auto j = to_json(jpd);
  // Index 1 has variables[0] = vertex 4 clicking.
  EXPECT_EQ(j.at("table").at("10").get<double>(), 0.2);
  EXPECT_EQ(j.at("table").at("01").get<double>(), 0.3);
  const auto back = joint_distribution_from_json(j);
  EXPECT_EQ(back.variables(), jpd.variables());
  EXPECT_EQ(back.table(), jpd.table());

  EXPECT_THROW(joint_distribution_from_json(parse_json(R"({"variables":[0],"table":{"2":1}})")), FormatError);
  EXPECT_THROW(joint_distribution_from_json(parse_json(R"({"variables":[0],"table":{"011":1}})")), FormatError);
  EXPECT_THROW(joint_distribution_from_json(parse_json(R"({"variables":[0],"table":{"0":0.5}})")),
               ValidationError);
}

TEST(JsonFeasibilityProblem, RoundTrip) {
  const FeasibilityProblem p{3, {{2, 0}, {1, 2}}, {PairTable{{{{0.1, 0.2}, {0.3, 0.4}}}},
                                                   PairTable{{{{0.25, 0.25}, {0.25, 0.25}}}}}};
  const auto back = feasibility_problem_from_json(parse_json(to_json(p).dump()));
  EXPECT_EQ(back.n, 3);
  EXPECT_EQ(back.edges, p.edges);
  EXPECT_EQ(back.tables, p.tables);
  EXPECT_THROW(feasibility_problem_from_json(parse_json(R"({"n": 2, "edges": [[0]], "tables": []})")),
               FormatError);
}

TEST(JsonGraph, RoundTrip) {
  const CommutationGraph g(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}, {{0, 1, 2}});
  const auto back = graph_from_json(parse_json(to_json(g).dump()));
  EXPECT_EQ(back.vertex_count(), 5);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.cliques(), g.cliques());
}

TEST(JsonCounts, RoundTrip) {
  const ContextCounts k{{{{5, 6}, {7, 0}}}};
  EXPECT_EQ(counts_from_json(to_json(k)).n, k.n);
  EXPECT_THROW(counts_from_json(parse_json("[[1,2],[3]]")), FormatError);
}

TEST(JsonReports, TwelveSignificantDigits) {
  EXPECT_EQ(round_significant(0.0910907256604123, 12), 0.0910907256604);
  EXPECT_EQ(format_number(0.0910907256604123), "0.0910907256604");
  EXPECT_EQ(format_number(0.5), "0.5");
  const auto j = to_json(evaluate_c(build_pentagon_family({0.2366, 0.1698})));
  EXPECT_EQ(j.at("c_value").get<double>(), 0.0910907256604);
  for (const char* key : {"h_a1_given_a5", "h_a1_given_a2", "h_a2_given_a3", "h_a3_given_a4", "h_a4_given_a5"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(GridCsv, HeaderAndRows) {
  const auto grid = scan_grid(default_theta_axis(3), default_phi_axis(2));
  std::ostringstream out;
  write_grid_csv(out, grid);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,phi,C");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6);
}

}  // namespace
}  // namespace ectx
