#include <benchmark/benchmark.h>

#include "delegation/eval.hpp"
#include "delegation/generate.hpp"
#include "delegation/solve.hpp"

namespace {

using namespace delegation;

Instance random_independent(int n, int support) {
  RandomSpec spec;
  spec.n = n;
  spec.support_size = support;
  spec.seed = 42;
  spec.outside = OutsideMode::Random;
  return gen_random(spec);
}

void BM_EvalDp(benchmark::State& state) {
  const auto inst = random_independent(static_cast<int>(state.range(0)), 3);
  const Menu menu = Menu::all(inst.size());
  for (auto _ : state) benchmark::DoNotOptimize(eval_independent_dp(inst, menu));
}
BENCHMARK(BM_EvalDp)->DenseRange(2, 12, 2);

void BM_EvalBruteForce(benchmark::State& state) {
  const auto inst = random_independent(static_cast<int>(state.range(0)), 3);
  const Menu menu = Menu::all(inst.size());
  for (auto _ : state) benchmark::DoNotOptimize(eval_bruteforce_product(inst, menu));
}
BENCHMARK(BM_EvalBruteForce)->DenseRange(2, 8, 2);

void BM_BruteForceOptIndependent(benchmark::State& state) {
  const auto inst = random_independent(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_opt(inst));
}
BENCHMARK(BM_BruteForceOptIndependent)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BruteForceOptLogFamily(benchmark::State& state) {
  const auto inst = gen_log_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_opt(inst));
}
BENCHMARK(BM_BruteForceOptLogFamily)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_BestThreshold(benchmark::State& state) {
  const auto inst = random_independent(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(best_threshold(inst));
}
BENCHMARK(BM_BestThreshold)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
