#include <benchmark/benchmark.h>

#include "ltower/corpus.hpp"
#include "ltower/factor.hpp"

using namespace ltower;

namespace {

void BM_FactorCorpusRow(benchmark::State& state, const char* id) {
  const BigInt n = corpus_example(id).table.back().value();
  for (auto _ : state) benchmark::DoNotOptimize(factor_kappa(n));
}
BENCHMARK_CAPTURE(BM_FactorCorpusRow, b4_1122_ell3, "b4-1122-ell3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FactorCorpusRow, b4_1222_ell3, "b4-1222-ell3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FactorCorpusRow, sqrt17_ell2, "sqrt17-ell2")->Unit(benchmark::kMillisecond);

void BM_RhoSemiprime(benchmark::State& state) {
  const BigInt n = BigInt(1000000007) * BigInt(998244353);
  for (auto _ : state) benchmark::DoNotOptimize(factor_kappa(n));
}
BENCHMARK(BM_RhoSemiprime)->Unit(benchmark::kMillisecond);

void BM_PocklingtonCertificate(benchmark::State& state) {
  const BigInt m127 = pow(BigInt(2), 127) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(is_certified_prime(m127));
}
BENCHMARK(BM_PocklingtonCertificate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
