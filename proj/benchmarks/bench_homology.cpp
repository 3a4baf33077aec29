#include <benchmark/benchmark.h>

#include "srcartier/enumeration.hpp"
#include "srcartier/homology.hpp"

namespace {

void BM_ReducedBetti(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto complex = srcartier::random_complex(n, 0.6, 3);
  const srcartier::PrimeField field(static_cast<std::uint32_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(srcartier::reduced_betti(complex, field));
  }
  state.counters["faces"] = static_cast<double>(complex.faces().size());
}
BENCHMARK(BM_ReducedBetti)->ArgsProduct({{6, 8, 10}, {2, 3}})->Unit(benchmark::kMicrosecond);

void BM_CohenMacaulay(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto complex = srcartier::random_complex(n, 0.6, 5);
  const srcartier::PrimeField field(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(srcartier::is_cohen_macaulay(complex, field));
  }
}
BENCHMARK(BM_CohenMacaulay)->DenseRange(5, 8)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
