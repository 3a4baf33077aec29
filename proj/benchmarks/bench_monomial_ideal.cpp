#include <benchmark/benchmark.h>

#include "srcartier/enumeration.hpp"
#include "srcartier/monomial_ideal.hpp"
#include "srcartier/stanley_reisner.hpp"

namespace {

// Frobenius colon I^[q] : I for the Stanley-Reisner ideal of a random complex.
void BM_FrobeniusColon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = static_cast<std::uint32_t>(state.range(1));
  const auto ideal = srcartier::ideal_of_complex(srcartier::random_complex(n, 0.5, 7));
  const auto frob = srcartier::frobenius_power(ideal, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(srcartier::colon(frob, ideal));
  }
  state.counters["gens"] = static_cast<double>(ideal.gens().size());
}
BENCHMARK(BM_FrobeniusColon)
    ->ArgsProduct({{6, 8, 10}, {2, 8}})
    ->Unit(benchmark::kMicrosecond);

void BM_Minimize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 11;
  auto ideal = srcartier::ideal_of_complex(srcartier::random_complex(n, 0.5, seed));
  while (ideal.gens().size() < 2) ideal = srcartier::ideal_of_complex(srcartier::random_complex(n, 0.5, ++seed));
  const auto frob = srcartier::frobenius_power(ideal, 2);
  std::vector<srcartier::Monomial> gens;
  for (const auto& a : ideal.gens()) {
    for (const auto& b : frob.gens()) gens.push_back(srcartier::lcm(a, b));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(srcartier::MonomialIdeal::minimize(static_cast<std::size_t>(n), gens));
  }
  state.counters["input"] = static_cast<double>(gens.size());
}
BENCHMARK(BM_Minimize)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
