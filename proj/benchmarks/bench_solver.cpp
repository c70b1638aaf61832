#include <benchmark/benchmark.h>

#include "pierce/generate.hpp"
#include "pierce/kkm.hpp"
#include "pierce/solver.hpp"

using namespace pierce;

namespace {

void BM_SolveThreeLines(benchmark::State& state) {
  const Families fams = to_families(generate({"planted3", 20, static_cast<int>(state.range(0)), 3, 7}));
  for (auto _ : state) benchmark::DoNotOptimize(solve_three_lines(fams));
}
BENCHMARK(BM_SolveThreeLines)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SolveTwoLines(benchmark::State& state) {
  const Families fams = to_families(generate({"planted2", 20, 2, 2, 8}));
  for (auto _ : state) benchmark::DoNotOptimize(solve_two_lines(fams));
}
BENCHMARK(BM_SolveTwoLines)->Unit(benchmark::kMillisecond);

void BM_ColorfulWitness(benchmark::State& state) {
  const CoverOracle o = threshold_cover(6, std::vector<double>(6, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(find_colorful_witness(o, 16));
}
BENCHMARK(BM_ColorfulWitness)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(generate({"tightRandom", 20, 3, 3, seed++}));
}
BENCHMARK(BM_Generate)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
