#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "ectx/entropy.hpp"
#include "ectx/error.hpp"
#include "ectx/feasibility.hpp"
#include "ectx/json_io.hpp"
#include "ectx/kcbs.hpp"
#include "ectx/optimizer.hpp"
#include "ectx/quantum.hpp"
#include "ectx/sampler.hpp"

namespace ectx::cli {

namespace {

constexpr double kOptimalTheta = 0.2366;
constexpr double kOptimalPhi = 0.1698;

struct Options {
  std::optional<double> theta;
  std::optional<double> phi;
  std::string config_path;
  std::string marginals_path;
  std::string from_config_path;
  std::string out_path = "-";
  std::string mode = "two-param";
  int resolution = 200;
  int restarts = 50;
  std::uint64_t seed = 0;
  std::uint64_t shots = 1000000;
  int bootstrap = 1000;
  bool compact = false;
  bool complex_search = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) { return parse_json(read_file(path)); }

void emit(std::ostream& out, const Json& j, const Options& opts) {
  out << (opts.compact ? j.dump() : j.dump(2)) << '\n';
}

// Config from --config FILE, or from --theta/--phi (both required together).
// Falls back to `fallback` when neither is given.
PentagonConfig resolve_config(const Options& opts, const std::string& config_path,
                              std::optional<FamilyParams> fallback, Json& source) {
  if (!config_path.empty()) {
    if (opts.theta || opts.phi) throw FormatError("give either a config file or --theta/--phi");
    source = {{"config", config_path}};
    return config_from_json(load_json(config_path));
  }
  if (opts.theta.has_value() != opts.phi.has_value()) {
    throw FormatError("--theta and --phi must be given together");
  }
  std::optional<FamilyParams> params = fallback;
  if (opts.theta) params = FamilyParams{*opts.theta, *opts.phi};
  if (!params) throw FormatError("no configuration given (use --config or --theta/--phi)");
  source = {{"family", {{"theta", params->theta}, {"phi", params->phi}}}};
  return build_pentagon_family(*params);
}

Json config_summary(const PentagonConfig& config) {
  const auto entropy = evaluate_c(config);
  const auto kcbs = kcbs_value(config);
  Json residuals = Json::array();
  for (double r : orthogonality_residuals(config)) residuals.push_back(round_significant(r, 3));
  return Json{{"entropy", to_json(entropy)},
              {"contextual", entropy.c_value > 0.0},
              {"kcbs", to_json(kcbs)},
              {"kcbs_violated", kcbs.violation > 0.0},
              {"symmetries", to_json(check_symmetries(config))},
              {"orthogonality_residuals", residuals}};
}

int cmd_eval(const Options& opts, std::ostream& out) {
  Json source;
  const PentagonConfig config = resolve_config(opts, opts.config_path, std::nullopt, source);
  Json report = config_summary(config);
  report["source"] = source;
  emit(out, report, opts);
  return kOk;
}

int cmd_scan(const Options& opts, std::ostream& out) {
  const Grid grid = scan_grid(default_theta_axis(opts.resolution), default_phi_axis(opts.resolution));
  std::ostringstream body;
  if (opts.compact) {
    Json rows = Json::array();
    for (const auto& p : grid.points) {
      rows.push_back({round_significant(p.theta, 12), round_significant(p.phi, 12),
                      round_significant(p.c, 12)});
    }
    body << Json{{"columns", {"theta", "phi", "C"}}, {"rows", rows}}.dump() << '\n';
  } else {
    write_grid_csv(body, grid);
  }
  if (opts.out_path == "-") {
    out << body.str();
    return kOk;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw FormatError("cannot write " + opts.out_path);
  file << body.str();
  if (!file) throw FormatError("failed writing " + opts.out_path);
  const auto& best = grid.best();
  emit(out,
       Json{{"out", opts.out_path},
            {"rows", grid.points.size()},
            {"best", {{"theta", round_significant(best.theta, 12)},
                      {"phi", round_significant(best.phi, 12)},
                      {"c", round_significant(best.c, 12)}}}},
       opts);
  return kOk;
}

int cmd_optimize(const Options& opts, std::ostream& out) {
  Json report;
  bool converged = true;
  if (opts.mode == "two-param") {
    const auto r = optimize_from_grid(opts.resolution);
    const auto config = build_pentagon_family(r.params);
    converged = r.converged;
    report = {{"mode", opts.mode},
              {"theta", round_significant(r.params.theta, 12)},
              {"phi", round_significant(r.params.phi, 12)},
              {"c_star", round_significant(r.c_star, 12)},
              {"converged", r.converged},
              {"at_boundary", r.at_boundary},
              {"evaluations", r.evaluations},
              {"summary", config_summary(config)},
              {"config", to_json(config)}};
  } else if (opts.mode == "general") {
    GeneralOptions g;
    g.complex_search = opts.complex_search;
    const auto r = optimize_general(opts.seed, opts.restarts, g);
    Json angles = Json::array();
    for (double a : r.angles) angles.push_back(round_significant(a, 12));
    report = {{"mode", opts.mode},
              {"complex", opts.complex_search},
              {"seed", opts.seed},
              {"restarts", opts.restarts},
              {"best_restart", r.best_restart},
              {"c_star", round_significant(r.c_star, 12)},
              {"angles", angles},
              {"summary", config_summary(r.config)},
              {"config", to_json(r.config)}};
  } else {
    throw FormatError("--mode must be two-param or general");
  }
  emit(out, report, opts);
  return converged ? kOk : kNotConverged;
}

int cmd_feasibility(const Options& opts, std::ostream& out) {
  FeasibilityProblem problem;
  Json source;
  if (!opts.marginals_path.empty()) {
    if (!opts.from_config_path.empty() || opts.theta || opts.phi) {
      throw FormatError("give exactly one of --marginals, --from-config, --theta/--phi");
    }
    problem = feasibility_problem_from_json(load_json(opts.marginals_path));
    source = {{"marginals", opts.marginals_path}};
  } else {
    problem = problem_from_config(resolve_config(opts, opts.from_config_path, std::nullopt, source));
  }
  Json report = to_json(jpd_exists(problem));
  report["source"] = source;
  emit(out, report, opts);
  return kOk;
}

int cmd_sample(const Options& opts, std::ostream& out) {
  if (opts.shots == 0) throw ParameterError("--shots must be >= 1");
  Json source;
  const PentagonConfig config = resolve_config(opts, opts.config_path,
                                               FamilyParams{kOptimalTheta, kOptimalPhi}, source);
  const auto counts = sample_cycle(config.state, config.projectors, opts.shots, opts.seed);
  EstimateOptions est_opts;
  est_opts.bootstrap_resamples = opts.bootstrap;
  est_opts.seed = mix_seed(opts.seed, 0xb007);
  const CEstimate est = estimate_c(counts, est_opts);
  Json edge_counts = Json::array();
  for (const auto& c : counts) edge_counts.push_back(to_json(c));
  emit(out,
       Json{{"source", source},
            {"shots_per_edge", opts.shots},
            {"seed", opts.seed},
            {"edges", {"A1A2", "A2A3", "A3A4", "A4A5", "A1A5"}},
            {"counts", edge_counts},
            {"estimate", to_json(est)},
            {"analytic_c", round_significant(evaluate_c(config).c_value, 12)}},
       opts);
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic and pentagram contextuality tests for a qutrit"};
  app.require_subcommand(1);
  Options opts;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--theta", opts.theta, "state angle (radians)");
    sub->add_option("--phi", opts.phi, "projector angle in [0, pi/4) (radians)");
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", opts.compact, "compact single-line JSON output");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate the entropic and pentagram inequalities");
  add_family(eval);
  eval->add_option("--config", opts.config_path, "configuration JSON file");
  add_json(eval);

  auto* scan = app.add_subcommand("scan", "Grid of C(theta, phi) as CSV");
  scan->add_option("--res", opts.resolution, "nodes per axis")->check(CLI::Range(2, 5000));
  scan->add_option("--out", opts.out_path, "output file ('-' for stdout)");
  scan->add_flag("--json", opts.compact, "write the grid as JSON rows instead of CSV");

  auto* optimize = app.add_subcommand("optimize", "Search for the maximal violation");
  optimize->add_option("--mode", opts.mode, "two-param or general");
  optimize->add_option("--restarts", opts.restarts, "restarts for general mode")
      ->check(CLI::Range(1, 100000));
  optimize->add_option("--seed", opts.seed, "64-bit seed for general mode");
  optimize->add_option("--res", opts.resolution, "seed grid nodes per axis for two-param mode")
      ->check(CLI::Range(2, 5000));
  optimize->add_flag("--complex", opts.complex_search, "search complex vectors (general mode)");
  add_json(optimize);

  auto* feas = app.add_subcommand("feasibility", "Decide whether a joint distribution exists");
  feas->add_option("--marginals", opts.marginals_path, "feasibility problem JSON file");
  feas->add_option("--from-config", opts.from_config_path, "configuration JSON file");
  add_family(feas);
  add_json(feas);

  auto* sample = app.add_subcommand("sample", "Simulate finite statistics and estimate C");
  sample->add_option("--shots", opts.shots, "shots per context");
  sample->add_option("--seed", opts.seed, "64-bit seed");
  sample->add_option("--bootstrap", opts.bootstrap, "bootstrap resamples")
      ->check(CLI::Range(0, 1000000));
  sample->add_option("--config", opts.config_path, "configuration JSON file");
  add_family(sample);
  add_json(sample);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*eval) return cmd_eval(opts, out);
    if (*scan) return cmd_scan(opts, out);
    if (*optimize) return cmd_optimize(opts, out);
    if (*feas) return cmd_feasibility(opts, out);
    if (*sample) return cmd_sample(opts, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kInputError;
}

}  // namespace ectx::cli
