#include <benchmark/benchmark.h>

#include <numbers>
#include <string>

#include "filling/isoperim.hpp"
#include "filling/map_io.hpp"
#include "filling/polygeom.hpp"
#include "filling/reducer.hpp"
#include "filling/surfmap.hpp"

using namespace filling;

namespace {

void BM_PerimeterFromArea(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(polygeom::perimeter_from_area(12, x));
    x = x < 30 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_PerimeterFromArea);

void BM_PerimeterSecondDerivative(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(polygeom::perimeter_second_derivative(12, x));
    x = x < 30 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_PerimeterSecondDerivative);

void BM_MinFillingLength(benchmark::State& state) {
  int g = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(polygeom::min_filling_length(g));
    g = g < 1000 ? g + 1 : 2;
  }
}
BENCHMARK(BM_MinFillingLength);

void BM_QuadSplitSweep(benchmark::State& state) {
  isoperim::GridSpec grid;
  grid.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isoperim::verify_lemma_3_2(grid));
}
BENCHMARK(BM_QuadSplitSweep)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_RandomInstances(benchmark::State& state) {
  isoperim::GridSpec grid;
  grid.instances = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isoperim::verify_theorem_3_1(grid));
}
BENCHMARK(BM_RandomInstances)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_VerifyCanonical(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(surfmap::verify_canonical(g));
}
BENCHMARK(BM_VerifyCanonical)->Arg(2)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_Reduce(benchmark::State& state, const std::string& name) {
  const auto j = read_json_file(std::string(FILLING_FIXTURE_DIR) + "/" + name + ".json");
  const auto input = reducer::validate_input(map_from_json(j), genus_from_json(j).value_or(0));
  reducer::ReduceOptions opts;
  opts.accept_satisfying_input = false;
  for (auto _ : state) benchmark::DoNotOptimize(reducer::reduce(input, opts));
}
BENCHMARK_CAPTURE(BM_Reduce, canonical_g5, std::string("canonical_g5"))->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Reduce, triangle_g3_v10, std::string("triangle_g3_v10"))->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Reduce, sixvalent_g2_v6, std::string("sixvalent_g2_v6"))->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
