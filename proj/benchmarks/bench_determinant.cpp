#include <benchmark/benchmark.h>

#include "ltower/corpus.hpp"
#include "ltower/derived_cover.hpp"
#include "ltower/spanning_trees.hpp"
#include "ltower/tower_spec.hpp"

using namespace ltower;

namespace {

// Reduced Laplacian of the level-n cover of the theta graph over Z/5^n.
IntMatrix theta_minor(unsigned n) {
  const VoltageAssignment va = build_voltage_assignment(corpus_example("theta-ell5").spec);
  const IntMatrix l = laplacian(derived_graph(va, n).graph());
  return l.minor(l.rows() - 1);
}

void BM_Bareiss(benchmark::State& state) {
  const IntMatrix m = theta_minor(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant_bareiss(m));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.rows()));
}
BENCHMARK(BM_Bareiss)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Multimodular(benchmark::State& state) {
  const IntMatrix m = theta_minor(static_cast<unsigned>(state.range(0)));
  const std::size_t bits = hadamard_bound_bits(m);
  for (auto _ : state) benchmark::DoNotOptimize(determinant_multimodular(m, bits));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.rows()));
}
BENCHMARK(BM_Multimodular)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SpanningTreeCount(benchmark::State& state) {
  const VoltageAssignment va = build_voltage_assignment(corpus_example("b3-ell5").spec);
  const Multigraph cover = derived_graph(va, static_cast<unsigned>(state.range(0))).graph();
  for (auto _ : state) benchmark::DoNotOptimize(spanning_tree_count(cover));
}
BENCHMARK(BM_SpanningTreeCount)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
