#include <benchmark/benchmark.h>

#include <vector>

#include "boolring/zerodiv.hpp"

namespace {

// Every mask leaves a common digit, so brute force visits all 2^n − 2 masks.
std::vector<boolring::Pext> unsatisfiable(std::size_t n) {
  const std::size_t width = (std::size_t{1} << n) - 2;
  std::vector<boolring::Pext> x(n, boolring::Pext::zero(width));
  for (std::size_t d = 0; d < width; ++d) {
    for (std::size_t i = 0; i < n; ++i) {
      if (((d + 1) >> i) & 1U) x[i].set(d);
    }
  }
  return x;
}

void BM_BruteForceExhaustive(benchmark::State& state) {
  const auto x = unsatisfiable(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(boolring::solve_bruteforce(x));
}
BENCHMARK(BM_BruteForceExhaustive)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_RandomSearch(benchmark::State& state) {
  const auto x = unsatisfiable(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(boolring::solve_random(x, static_cast<std::uint64_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_RandomSearch)->Range(16, 4096);

}  // namespace
