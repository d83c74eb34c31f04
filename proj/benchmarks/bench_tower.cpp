#include <benchmark/benchmark.h>

#include "ltower/corpus.hpp"
#include "ltower/gen_poly.hpp"
#include "ltower/int_poly.hpp"
#include "ltower/tower.hpp"
#include "ltower/tower_spec.hpp"

using namespace ltower;

namespace {

void BM_LevelNorm(benchmark::State& state, const char* id) {
  const GenPoly f = determinant(voltage_matrix(build_voltage_assignment(corpus_example(id).spec)));
  const auto level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(level_norm(f, level));
}
BENCHMARK_CAPTURE(BM_LevelNorm, bouquet_ell5, "b3-ell5")->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LevelNorm, sqrt17_ell2, "sqrt17-ell2")->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_CyclotomicResultant(benchmark::State& state) {
  const IntPoly phi = cyclotomic(static_cast<std::uint64_t>(state.range(0)));
  const IntPoly g{-1, -4, -10, -4, -1};
  for (auto _ : state) benchmark::DoNotOptimize(resultant(phi, g));
}
BENCHMARK(BM_CyclotomicResultant)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

void BM_Tower(benchmark::State& state, const char* id) {
  const VoltageAssignment va = build_voltage_assignment(corpus_example(id).spec);
  const auto depth = static_cast<unsigned>(state.range(0));
  TowerOptions options;
  options.matrix_tree_max_level = 0;
  for (auto _ : state) benchmark::DoNotOptimize(Tower(va, depth, options).kappas());
}
BENCHMARK_CAPTURE(BM_Tower, b4_1122_ell3, "b4-1122-ell3")->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Tower, sqrt17_ell2, "sqrt17-ell2")->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
