#include "reflect/boxes.hpp"
#include "reflect/classgroup.hpp"
#include "reflect/cubic.hpp"
#include "reflect/localfourier.hpp"
#include "reflect/quad.hpp"
#include "reflect/quartic.hpp"
#include "reflect/subring.hpp"

#include <benchmark/benchmark.h>

using namespace reflect;

static void BM_QuadraticClasses(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_quadratics(Int(st.range(0))));
}
BENCHMARK(BM_QuadraticClasses)->Arg(60)->Arg(-240)->Arg(1200);

static void BM_CubicClasses(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_cubics(Int(st.range(0))));
}
BENCHMARK(BM_CubicClasses)->Arg(-23)->Arg(-4027)->Arg(3969);

static void BM_CubicSweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(check_cubic_ON(st.range(0)));
}
BENCHMARK(BM_CubicSweep)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_QuarticCount(benchmark::State& st) {
  MonicCubic g = st.range(0) == 0 ? MonicCubic{0, -1, -1} : MonicCubic{-2, -3, 6};
  for (auto _ : st) benchmark::DoNotOptimize(count_quartics(g));
}
BENCHMARK(BM_QuarticCount)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_BoxSearch(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(search_boxes({1, 0, -1, -1}, static_cast<int>(st.range(0)), false));
}
BENCHMARK(BM_BoxSearch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_LevelTransform(benchmark::State& st) {
  FilteredGroup G = make_filtered_group(2, 1, st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(check_level_transform(G, 0));
}
BENCHMARK(BM_LevelTransform)->Arg(1)->Arg(2)->Arg(3);

static void BM_SubringSeries(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(subring_series(SplittingType::T111, 0, 5, 0, 0, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_SubringSeries)->Arg(10)->Arg(40);

static void BM_ClassGroup(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(class_group(Int(st.range(0))));
}
BENCHMARK(BM_ClassGroup)->Arg(-3299)->Arg(-99999)->Arg(1229);
BENCHMARK_MAIN();
