#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "boolring/pext.hpp"

namespace {

boolring::Pext random_pext(std::size_t width, std::mt19937_64& rng) {
  std::vector<boolring::Pext::Word> words((width + 63) / 64);
  for (auto& w : words) w = rng();
  return boolring::Pext::from_words(width, words);
}

void BM_Xor(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto a = random_pext(width, rng), b = random_pext(width, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_Xor)->Range(64, 1 << 16);

void BM_And(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto a = random_pext(width, rng), b = random_pext(width, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_And)->Range(64, 1 << 16);

void BM_UnionFold(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<boolring::Pext> xs;
  for (int i = 0; i < state.range(0); ++i) xs.push_back(random_pext(256, rng));
  for (auto _ : state) benchmark::DoNotOptimize(boolring::union_fold(xs));
}
BENCHMARK(BM_UnionFold)->Range(2, 512);

void BM_Compare(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto a = random_pext(1024, rng);
  const auto b = a * random_pext(1024, rng);
  for (auto _ : state) benchmark::DoNotOptimize(boolring::compare(a, b));
}
BENCHMARK(BM_Compare);

}  // namespace
