#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "boolring/module.hpp"

namespace {

boolring::BrMatrix random_matrix(std::size_t k, std::size_t width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<boolring::Pext> cells;
  for (std::size_t i = 0; i < k * k; ++i) {
    std::vector<boolring::Pext::Word> words((width + 63) / 64);
    for (auto& w : words) w = rng();
    cells.push_back(boolring::Pext::from_words(width, words));
  }
  return boolring::BrMatrix(k, k, std::move(cells));
}

// Args: matrix size k, digit count n.
void BM_KernelBasis(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)),
                               static_cast<std::size_t>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(boolring::kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Args({4, 16})->Args({16, 64})->Args({64, 64})->Args({64, 256});

void BM_Matvec(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(k, 256, 8);
  const auto v = boolring::random_modus(k, 256, 9);
  for (auto _ : state) benchmark::DoNotOptimize(boolring::matvec(m, v));
}
BENCHMARK(BM_Matvec)->Range(4, 128);

void BM_RandomKernelElement(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 256, 10);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(boolring::random_kernel_element(m, seed++));
}
BENCHMARK(BM_RandomKernelElement)->Range(4, 64);

}  // namespace
