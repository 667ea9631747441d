#include <benchmark/benchmark.h>

#include <random>

#include "blobcell/domino.hpp"
#include "blobcell/fock.hpp"
#include "blobcell/knuth.hpp"
#include "blobcell/weylb.hpp"

using namespace blobcell;

static void BM_EnumerateWb(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerateWb(n));
  state.counters["elements"] = static_cast<double>(enumerateWb(n).size());
}
BENCHMARK(BM_EnumerateWb)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_WbTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(WbTable(n));
}
BENCHMARK(BM_WbTable)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_WordCriterion(benchmark::State& state) {
  const auto all = allSignedPermutations(5);
  for (auto _ : state)
    for (const auto& w : all) benchmark::DoNotOptimize(isInWbByWords(w));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(all.size()));
}
BENCHMARK(BM_WordCriterion);

static void BM_DominoInsert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<SignedPermutation> sample;
  for (int k = 0; k < 64; ++k) sample.push_back(unrank(n, rng() % groupOrder(n)));
  for (auto _ : state)
    for (const auto& w : sample) benchmark::DoNotOptimize(dominoInsert(w));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sample.size()));
}
BENCHMARK(BM_DominoInsert)->Arg(4)->Arg(8)->Arg(12);

static void BM_DominoRoundTrip(benchmark::State& state) {
  const auto w = SignedPermutation({3, -1, 5, -2, 4, 6});
  for (auto _ : state) benchmark::DoNotOptimize(dominoReverse(dominoInsert(w)));
}
BENCHMARK(BM_DominoRoundTrip);

static void BM_PlacticClass(benchmark::State& state) {
  const auto w = SignedPermutation({2, -4, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(placticClass(w));
}
BENCHMARK(BM_PlacticClass);

static void BM_CrystalAnchor(benchmark::State& state) {
  const std::vector<int> word{0, 1, 0, 2, 2, 1, 1, 0, 0, 2};
  for (auto _ : state) benchmark::DoNotOptimize(applyCrystalWord(word, {}, {-1, 0, 3}));
}
BENCHMARK(BM_CrystalAnchor);

static void BM_KleshchevTable(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  const int m = (e + 1) / 2;
  for (auto _ : state)
    for (int lambda = 10; lambda >= -10; lambda -= 2) benchmark::DoNotOptimize(kleshchevConvert(10, e, m, {10, lambda}));
}
BENCHMARK(BM_KleshchevTable)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

BENCHMARK_MAIN();
