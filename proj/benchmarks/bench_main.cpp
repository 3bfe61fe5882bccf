#include <benchmark/benchmark.h>

#include "gmssc/exact.hpp"
#include "gmssc/instance.hpp"
#include "gmssc/kernel.hpp"
#include "gmssc/lp.hpp"
#include "gmssc/rounding.hpp"
#include "gmssc/tail_bounds.hpp"

#include <cstdint>
#include <vector>

namespace {

gmssc::Instance seeded_instance(int n, int m, std::uint64_t seed) {
  gmssc::GeneratorParams params;
  params.n = n;
  params.m = m;
  params.s_min = 1;
  params.s_max = n < 4 ? n : 4;
  params.rule = gmssc::RequirementRule::uniform;
  params.seed = seed;
  return gmssc::generate(params);
}

void BM_solve_lp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gmssc::Instance instance = seeded_instance(n, n + 2, 31);
  for (auto _ : state) {
    gmssc::FractionalSchedule schedule = gmssc::solve_gmssc_lp(instance);
    benchmark::DoNotOptimize(schedule.objective);
  }
}
BENCHMARK(BM_solve_lp)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_transform_schedule(benchmark::State& state) {
  gmssc::Instance instance = seeded_instance(8, 10, 31);
  gmssc::FractionalSchedule schedule = gmssc::solve_gmssc_lp(instance);
  gmssc::KernelSpec spec = gmssc::gmssc_kernel(instance.n, 2.043);
  for (auto _ : state) {
    gmssc::TransformedSchedule z = gmssc::transform_schedule(spec, schedule);
    benchmark::DoNotOptimize(z.z_prefix);
  }
}
BENCHMARK(BM_transform_schedule)->Unit(benchmark::kMicrosecond);

void BM_alpha_point_round(benchmark::State& state) {
  gmssc::Instance instance = seeded_instance(8, 10, 31);
  gmssc::FractionalSchedule schedule = gmssc::solve_gmssc_lp(instance);
  gmssc::TransformedSchedule z =
      gmssc::transform_schedule(gmssc::gmssc_kernel(instance.n, 2.043), schedule);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    gmssc::RoundingTrial trial = gmssc::alpha_point_round(z, seed++);
    benchmark::DoNotOptimize(trial.order);
  }
}
BENCHMARK(BM_alpha_point_round)->Unit(benchmark::kMicrosecond);

void BM_estimate_cost(benchmark::State& state) {
  const int trials = static_cast<int>(state.range(0));
  gmssc::Instance instance = seeded_instance(8, 10, 31);
  gmssc::FractionalSchedule schedule = gmssc::solve_gmssc_lp(instance);
  gmssc::TransformedSchedule z =
      gmssc::transform_schedule(gmssc::gmssc_kernel(instance.n, 2.043), schedule);
  for (auto _ : state) {
    gmssc::CostReport report = gmssc::estimate_cost(z, instance, trials, 2026);
    benchmark::DoNotOptimize(report.mean);
  }
}
BENCHMARK(BM_estimate_cost)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_poisson_binomial_cdf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(i)] = (i % 9 + 1) / 10.0;
  }
  const int c = n / 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmssc::poisson_binomial_cdf(p, c));
  }
}
BENCHMARK(BM_poisson_binomial_cdf)->Arg(16)->Arg(64)->Arg(256);

void BM_exact_opt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  gmssc::Instance instance = seeded_instance(n, 2 * n, 47);
  for (auto _ : state) {
    gmssc::ExactResult result = gmssc::exact_opt(instance);
    benchmark::DoNotOptimize(result.cost);
  }
}
BENCHMARK(BM_exact_opt)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_greedy_mssc(benchmark::State& state) {
  gmssc::Instance instance = seeded_instance(200, 400, 53);
  for (gmssc::Edge& edge : instance.edges) {
    edge.k = 1;
  }
  instance = gmssc::validate(std::move(instance));
  for (auto _ : state) {
    std::vector<int> order = gmssc::greedy_mssc(instance);
    benchmark::DoNotOptimize(order);
  }
}
BENCHMARK(BM_greedy_mssc)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
