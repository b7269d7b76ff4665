#include <benchmark/benchmark.h>

#include "fpr/cc_solver.hpp"
#include "fpr/instances.hpp"
#include "fpr/monroe_solver.hpp"
#include "fpr/oracle.hpp"
#include "fpr/reduction.hpp"

namespace {

const fpr::DissatisfactionFunction kBorda = fpr::DissatisfactionFunction::borda();

void BM_SolveCc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fpr::Election e = fpr::gen_random_single_crossing(50, n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpr::solve_cc(e, 10, kBorda, fpr::Aggregator::kSum));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveCc)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

void BM_SolveCcWidth(benchmark::State& state) {
  const fpr::ClonedInstance ci =
      fpr::gen_cloned_pairs(fpr::gen_random_single_crossing(12, 200, 2), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fpr::solve_cc_width(ci.election, ci.partition, 4, kBorda, fpr::Aggregator::kSum));
  }
}
BENCHMARK(BM_SolveCcWidth)->Unit(benchmark::kMillisecond);

void BM_MonroeEgalitarian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fpr::Election e = fpr::gen_random_sc_narcissistic(60, n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpr::solve_monroe_egalitarian_sc_narcissistic(e, 10, kBorda));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_MonroeEgalitarian)->RangeMultiplier(2)->Range(250, 2000)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_BalancedAssignment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fpr::Election e = fpr::gen_random_single_crossing(30, n, 4);
  std::vector<fpr::CandidateId> committee;
  for (int c = 0; c < 10; ++c) committee.emplace_back(c * 3);
  const auto agg = state.range(1) ? fpr::Aggregator::kMax : fpr::Aggregator::kSum;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpr::optimal_balanced_assignment(e, committee, 10, kBorda, agg));
  }
}
BENCHMARK(BM_BalancedAssignment)->ArgsProduct({{100, 400, 1600}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_CcBruteforce(benchmark::State& state) {
  const fpr::Election e = fpr::gen_random_single_crossing(20, 40, 5);
  fpr::OracleConfig cfg;
  cfg.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fpr::solve_cc_bruteforce(e, 4, kBorda, fpr::Aggregator::kSum, cfg));
  }
}
BENCHMARK(BM_CcBruteforce)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BuildReduction(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const fpr::Election source = fpr::gen_random_single_crossing(m, m, 6);
  for (auto _ : state) benchmark::DoNotOptimize(fpr::build_monroe_reduction(source, 1));
}
BENCHMARK(BM_BuildReduction)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
