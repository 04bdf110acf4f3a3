#include <benchmark/benchmark.h>

#include "ectx/entropy.hpp"
#include "ectx/feasibility.hpp"
#include "ectx/jpd_graph.hpp"
#include "ectx/optimizer.hpp"
#include "ectx/quantum.hpp"
#include "ectx/sampler.hpp"

namespace {

using namespace ectx;

void BM_EvaluateC(benchmark::State& state) {
  const auto config = build_pentagon_family({0.2366, 0.1698});
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_c(config));
}
BENCHMARK(BM_EvaluateC);

void BM_ScanGrid(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_grid(default_theta_axis(res), default_phi_axis(res)));
  }
  state.SetItemsProcessed(state.iterations() * res * res);
}
BENCHMARK(BM_ScanGrid)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_OptimizeTwoParam(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimize_two_param({0.24, 0.17}));
}
BENCHMARK(BM_OptimizeTwoParam)->Unit(benchmark::kMillisecond);

void BM_JpdExistsPentagram(benchmark::State& state) {
  const auto problem = problem_from_config(build_symmetric_pentagram());
  for (auto _ : state) benchmark::DoNotOptimize(jpd_exists(problem));
}
BENCHMARK(BM_JpdExistsPentagram)->Unit(benchmark::kMicrosecond);

void BM_JpdExistsCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto problem = problem_from_jpd(random_jpd(n, 1), CommutationGraph::cycle(n));
  for (auto _ : state) benchmark::DoNotOptimize(jpd_exists(problem));
}
BENCHMARK(BM_JpdExistsCycle)->DenseRange(5, 10, 1)->Unit(benchmark::kMillisecond);

void BM_BuildTreeJpd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v});
  const CommutationGraph tree(n, edges);
  const auto marginals = pairwise_marginals(random_jpd(n, 2), tree);
  for (auto _ : state) benchmark::DoNotOptimize(build_tree_jpd(tree, marginals));
}
BENCHMARK(BM_BuildTreeJpd)->Arg(7)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_SampleCycle(benchmark::State& state) {
  const auto config = build_pentagon_family({0.2366, 0.1698});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_cycle(config.state, config.projectors, 1000000, 7));
  }
}
BENCHMARK(BM_SampleCycle)->Unit(benchmark::kMicrosecond);

void BM_EstimateC(benchmark::State& state) {
  const auto config = build_pentagon_family({0.2366, 0.1698});
  const auto counts = sample_cycle(config.state, config.projectors, 1000000, 7);
  EstimateOptions opts;
  opts.bootstrap_resamples = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_c(counts, opts));
}
BENCHMARK(BM_EstimateC)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
