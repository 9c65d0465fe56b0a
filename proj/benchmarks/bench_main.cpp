#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "plancut/arrangement.hpp"
#include "plancut/cutting.hpp"
#include "plancut/guarding.hpp"
#include "plancut/oracle.hpp"
#include "plancut/reduction.hpp"

using namespace plancut;

namespace {
std::vector<Line> random_lines(long n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::set<Line, LineLess> pool;
  while ((long)pool.size() < n) {
    long a = (long)(rng() % 201) - 100;
    long b = (long)(rng() % 201) - 100;
    pool.insert(Line::slope_intercept(Rat(a), Rat(b)));
  }
  return {pool.begin(), pool.end()};
}
}  // namespace

static void BM_build_arrangement(benchmark::State& state) {
  auto lines = random_lines(state.range(0), 42);
  for (auto _ : state) {
    Arrangement arr = build_arrangement(lines);
    benchmark::DoNotOptimize(arr.face_count());
  }
}
BENCHMARK(BM_build_arrangement)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_locate(benchmark::State& state) {
  auto lines = random_lines(32, 7);
  Arrangement arr = build_arrangement(lines);
  std::mt19937_64 rng(3);
  std::vector<Point> qs;
  for (int i = 0; i < 256; ++i)
    qs.emplace_back(rat((long)(rng() % 2001) - 1000, 7), rat((long)(rng() % 2001) - 1000, 7));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arr.locate(qs[i++ % qs.size()]));
  }
}
BENCHMARK(BM_locate);

static void BM_weak_cutting(benchmark::State& state) {
  WeightedLineSet L = WeightedLineSet::uniform(random_lines(state.range(0), 11));
  Rat eps = rat(1, 10);
  for (auto _ : state) {
    Cutting cut = weak_cutting(L, eps, 23);
    benchmark::DoNotOptimize(cut.lines.size());
  }
}
BENCHMARK(BM_weak_cutting)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_simple_weak_cutting(benchmark::State& state) {
  WeightedLineSet L = WeightedLineSet::uniform(random_lines(state.range(0), 11));
  Rat eps = rat(1, 10);
  for (auto _ : state) {
    Cutting cut = simple_weak_cutting(L, eps, 23);
    benchmark::DoNotOptimize(cut.lines.size());
  }
}
BENCHMARK(BM_simple_weak_cutting)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_find_bad_polygon(benchmark::State& state) {
  std::vector<Point> P = gen_instance({GenKind::UniformRandom, state.range(0), 17, 500});
  std::vector<Point> W = {P[0], P[P.size() / 2]};
  for (auto _ : state) {
    auto bad = find_bad_polygon(P, 3, W);
    benchmark::DoNotOptimize(bad.has_value());
  }
}
BENCHMARK(BM_find_bad_polygon)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_solve_reduction(benchmark::State& state) {
  Instance inst = Instance::of(
      {PointSet{gen_instance({GenKind::UniformRandom, state.range(0), 29, 120}), rat(1, 2)}});
  for (auto _ : state) {
    Solution s = solve_reduction(inst);
    benchmark::DoNotOptimize(s.lines.size());
  }
}
BENCHMARK(BM_solve_reduction)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_solve_guarding(benchmark::State& state) {
  Instance inst = Instance::of(
      {PointSet{gen_instance({GenKind::UniformRandom, state.range(0), 31, 60}), rat(1, 2)}});
  for (auto _ : state) {
    GuardSet gs = solve_guarding(inst);
    benchmark::DoNotOptimize(gs.guards.size());
  }
}
BENCHMARK(BM_solve_guarding)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
