#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ectx/json_io.hpp"

namespace ectx {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ectx");
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ectx_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  fs::path dir_;
};

TEST_F(CliTest, EvalFamily) {
  const auto r = run_cli({"eval", "--theta", "0.2366", "--phi", "0.1698"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_NEAR(j.at("entropy").at("c_value").get<double>(), 0.091, 1e-3);
  EXPECT_TRUE(j.at("contextual").get<bool>());
  EXPECT_TRUE(j.at("kcbs_violated").get<bool>());
  EXPECT_TRUE(j.at("symmetries").at("axis_overlap").get<bool>());
}

TEST_F(CliTest, EvalPentagramConfig) {
  const auto path = write("pentagram.json", to_json(build_symmetric_pentagram()).dump(2));
  const auto r = run_cli({"eval", "--config", path, "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.find('\n'), r.out.size() - 1);
  EXPECT_NEAR(parse_json(r.out).at("kcbs").at("sum").get<double>(), std::sqrt(5.0), 1e-9);
}

TEST_F(CliTest, EvalDegenerateOrigin) {
  const auto r = run_cli({"eval", "--theta", "0", "--phi", "0"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_LE(j.at("entropy").at("c_value").get<double>(), 0.0);
  EXPECT_FALSE(j.at("contextual").get<bool>());
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli({"eval", "--config", write("bad.json", "{not json")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"eval", "--config", (dir_ / "missing.json").string()}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"eval", "--theta", "0.1"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"eval", "--theta", "0.1", "--phi", "1.0"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"eval"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"optimize", "--mode", "sideways"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"sample", "--shots", "0"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"scan", "--res", "1"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"scan", "--res", "3", "--out", (dir_ / "no/such/dir.csv").string()}).code,
            cli::kInputError);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, cli::kOk); }

TEST_F(CliTest, InvariantViolationExitsThree) {
  auto j = to_json(build_symmetric_pentagram());
  j["projectors"][1] = to_json(Vec3(0, 0, 1));
  const auto r = run_cli({"eval", "--config", write("skew.json", j.dump())});
  EXPECT_EQ(r.code, cli::kInvariantViolation);
  EXPECT_NE(r.err.find("invariant"), std::string::npos);

  const auto marg = write("marg.json", R"({"n": 2, "edges": [[0, 1]], "tables": [[[0.5, 0.5], [0.5, 0.5]]]})");
  EXPECT_EQ(run_cli({"feasibility", "--marginals", marg}).code, cli::kInvariantViolation);
}

TEST_F(CliTest, ScanWritesCsv) {
  const auto path = (dir_ / "grid.csv").string();
  const auto r = run_cli({"scan", "--res", "4", "--out", path});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,phi,C");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 16);
  EXPECT_EQ(parse_json(r.out).at("rows").get<int>(), 16);
}

TEST_F(CliTest, ScanJsonRows) {
  const auto r = run_cli({"scan", "--res", "3", "--json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = parse_json(r.out);
  EXPECT_EQ(j.at("columns"), Json::array({"theta", "phi", "C"}));
  EXPECT_EQ(j.at("rows").size(), 9u);
}

TEST_F(CliTest, OptimizeModes) {
  const auto two = run_cli({"optimize", "--mode", "two-param", "--res", "60", "--json"});
  ASSERT_EQ(two.code, cli::kOk) << two.err;
  const auto j = parse_json(two.out);
  EXPECT_NEAR(j.at("c_star").get<double>(), 0.091, 1e-3);
  EXPECT_NEAR(j.at("theta").get<double>(), 0.2366, 0.005);

  const auto gen = run_cli({"optimize", "--mode", "general", "--restarts", "20", "--seed", "3", "--json"});
  ASSERT_EQ(gen.code, cli::kOk) << gen.err;
  EXPECT_LE(parse_json(gen.out).at("c_star").get<double>(), 0.0911);
}

TEST_F(CliTest, FeasibilitySources) {
  const auto cfg = write("opt.json", to_json(build_pentagon_family({0.2366, 0.1698})).dump());
  const auto a = run_cli({"feasibility", "--from-config", cfg, "--json"});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(parse_json(a.out).at("status"), "infeasible");

  const auto b = run_cli({"feasibility", "--theta", "0", "--phi", "0"});
  ASSERT_EQ(b.code, cli::kOk) << b.err;
  EXPECT_EQ(parse_json(b.out).at("status"), "feasible");

  const auto marg = write("chain.json",
                          R"({"n": 3, "edges": [[0, 1], [1, 2]],
                              "tables": [[[0.3, 0.2], [0.1, 0.4]], [[0.2, 0.2], [0.3, 0.3]]]})");
  const auto c = run_cli({"feasibility", "--marginals", marg});
  ASSERT_EQ(c.code, cli::kOk) << c.err;
  EXPECT_EQ(parse_json(c.out).at("status"), "feasible");

  EXPECT_EQ(run_cli({"feasibility", "--marginals", marg, "--from-config", cfg}).code, cli::kInputError);
}

TEST_F(CliTest, SampleReport) {
  const auto r = run_cli({"sample", "--shots", "20000", "--seed", "5", "--bootstrap", "100", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_EQ(j.at("counts").size(), 5u);
  EXPECT_NEAR(j.at("estimate").at("c_hat").get<double>(), 0.091, 0.05);
  EXPECT_EQ(j.at("estimate").at("bootstrap_resamples").get<int>(), 100);
}

TEST_F(CliTest, SeededCommandsAreByteIdentical) {
  const auto grid_a = (dir_ / "a.csv").string(), grid_b = (dir_ / "b.csv").string();
  const std::vector<std::vector<std::string>> commands{
      {"eval", "--theta", "0.2366", "--phi", "0.1698"},
      {"scan", "--res", "20"},
      {"optimize", "--mode", "two-param", "--res", "40"},
      {"optimize", "--mode", "general", "--restarts", "6", "--seed", "11"},
      {"optimize", "--mode", "general", "--restarts", "3", "--seed", "11", "--complex"},
      {"feasibility", "--theta", "0.2366", "--phi", "0.1698"},
      {"sample", "--shots", "50000", "--seed", "12", "--bootstrap", "50"},
  };
  for (const auto& cmd : commands) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    ASSERT_EQ(a.code, cli::kOk) << cmd[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
  run_cli({"scan", "--res", "15", "--out", grid_a});
  run_cli({"scan", "--res", "15", "--out", grid_b});
  std::ifstream fa(grid_a), fb(grid_b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
}

TEST_F(CliTest, DifferentSeedsDiffer) {
  const auto a = run_cli({"sample", "--shots", "1000", "--seed", "1", "--bootstrap", "10"});
  const auto b = run_cli({"sample", "--shots", "1000", "--seed", "2", "--bootstrap", "10"});
  EXPECT_NE(a.out, b.out);
}

}  // namespace
}  // namespace ectx
