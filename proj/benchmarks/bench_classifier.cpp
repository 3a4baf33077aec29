#include <benchmark/benchmark.h>

#include <vector>

#include "srcartier/classifier.hpp"
#include "srcartier/enumeration.hpp"

namespace {

std::vector<srcartier::SimplicialComplex> all_complexes(int n) {
  std::vector<srcartier::SimplicialComplex> out;
  srcartier::for_each_complex(n, [&out](const srcartier::SimplicialComplex& c) { out.push_back(c); });
  return out;
}

void BM_EnumerateComplexes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = srcartier::for_each_complex(n, [](const auto&) {});
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateComplexes)->DenseRange(3, 5);

void BM_ClassifyViaIdeal(benchmark::State& state) {
  const auto complexes = all_complexes(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& c : complexes) {
      benchmark::DoNotOptimize(srcartier::classify_via_ideal(c, 2).verdict);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(complexes.size()));
}
BENCHMARK(BM_ClassifyViaIdeal)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ClassifyViaFreeFace(benchmark::State& state) {
  const auto complexes = all_complexes(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& c : complexes) {
      benchmark::DoNotOptimize(srcartier::classify_via_free_face(c).verdict);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(complexes.size()));
}
BENCHMARK(BM_ClassifyViaFreeFace)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ClassifyRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<srcartier::SimplicialComplex> complexes;
  for (std::uint64_t t = 0; t < 200; ++t) {
    complexes.push_back(srcartier::random_complex(n, 0.1 * static_cast<double>(1 + t % 9), 42 ^ t));
  }
  for (auto _ : state) {
    for (const auto& c : complexes) {
      benchmark::DoNotOptimize(srcartier::classify(c).verdict);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(complexes.size()));
}
BENCHMARK(BM_ClassifyRandom)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
