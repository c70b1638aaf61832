#include <benchmark/benchmark.h>

#include <vector>

#include "pierce/geometry.hpp"
#include "pierce/kkm.hpp"
#include "pierce/random.hpp"
#include "pierce/transversal.hpp"

using namespace pierce;

namespace {

std::vector<ConvexBody> bodies(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ConvexBody> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Point> v;
    const Point c{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    for (int k = 0; k < 8; ++k) v.push_back(c + Point{uniform(rng, -0.3, 0.3), uniform(rng, -0.3, 0.3)});
    out.push_back(convex_hull(v));
  }
  return out;
}

void BM_OrientExact(benchmark::State& state) {
  const Point a{0.1, 0.2}, b{12.0, 12.0}, c{24.0, 24.0};
  for (auto _ : state) benchmark::DoNotOptimize(orient_exact(a, b, c));
}
BENCHMARK(BM_OrientExact);

void BM_ConvexHull(benchmark::State& state) {
  Rng rng(2);
  std::vector<Point> pts(static_cast<std::size_t>(state.range(0)));
  for (Point& p : pts) p = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->Arg(16)->Arg(256)->Arg(4096);

void BM_TightTriple(benchmark::State& state) {
  const auto b = bodies(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tight_triple(b[0], b[1], b[2]));
}
BENCHMARK(BM_TightTriple);

void BM_CommonTransversal(benchmark::State& state) {
  const auto b = bodies(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(common_transversal(b));
}
BENCHMARK(BM_CommonTransversal)->Arg(3)->Arg(4)->Arg(10);

void BM_PerfectMatching(benchmark::State& state) {
  Rng rng(5);
  MembershipMatrix bits(36);
  for (auto& v : bits) v = uniform01(rng) < 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(perfect_matching(bits, 6));
}
BENCHMARK(BM_PerfectMatching);

}  // namespace
