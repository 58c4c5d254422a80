#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "boolring/cluster.hpp"

namespace {

// Two groups with disjoint private digits plus shared noise digits, so a
// reasonable clustering exists.
std::vector<boolring::Pext> planted(std::size_t k, std::size_t width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<boolring::Pext> out;
  for (std::size_t i = 0; i < k; ++i) {
    auto p = boolring::Pext::zero(width);
    p.set(i % 2 == 0 ? 0 : 1);
    for (std::size_t d = 2; d < width; ++d) p.set(d, rng() & 1U);
    out.push_back(p);
  }
  return out;
}

void BM_ClusterAtoms(benchmark::State& state) {
  const auto x = planted(static_cast<std::size_t>(state.range(0)), 64, 1);
  for (auto _ : state) benchmark::DoNotOptimize(boolring::cluster_atoms(x));
}
BENCHMARK(BM_ClusterAtoms)->Range(4, 64);

void BM_ClusterViaM(benchmark::State& state) {
  const auto x = planted(static_cast<std::size_t>(state.range(0)), 16, 2);
  for (auto _ : state) benchmark::DoNotOptimize(boolring::cluster_via_m(x));
}
BENCHMARK(BM_ClusterViaM)->Range(4, 16);

void BM_ClusterViaGram(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto x = planted(k, 16, 3);
  const auto pairs = boolring::PairList::all_pairs(k);
  for (auto _ : state) benchmark::DoNotOptimize(boolring::cluster_via_gram(x, pairs));
}
BENCHMARK(BM_ClusterViaGram)->DenseRange(4, 8, 2);

}  // namespace
