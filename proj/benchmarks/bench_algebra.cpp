#include <benchmark/benchmark.h>

#include "blobcell/blob.hpp"
#include "blobcell/fock.hpp"
#include "blobcell/hecke.hpp"
#include "blobcell/laurent.hpp"
#include "blobcell/tensor.hpp"

using namespace blobcell;

static void BM_LaurentMultiply(benchmark::State& state) {
  const auto a = quantumFactorial(static_cast<int>(state.range(0)));
  const auto b = gauss(7, 2) + LaurentPoly::monomial(-3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMultiply)->Arg(4)->Arg(8)->Arg(16);

static void BM_KLBasisTypeB(benchmark::State& state) {
  const auto sys = CoxeterSystem::typeB(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(KLBasis(sys));
}
BENCHMARK(BM_KLBasisTypeB)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_LeftCells(benchmark::State& state) {
  const auto sys = CoxeterSystem::typeB(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    KLBasis basis(sys);
    benchmark::DoNotOptimize(basis.leftCells());
  }
}
BENCHMARK(BM_LeftCells)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_IdealCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(checkIdealJn(n));
}
BENCHMARK(BM_IdealCheck)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_TensorSpace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(checkTensorSpace(n));
}
BENCHMARK(BM_TensorSpace)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_BlobDiagramBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(blobDiagramBasis(n));
}
BENCHMARK(BM_BlobDiagramBasis)->DenseRange(2, 6);

static void BM_StandardModule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(standardModule({n, n % 2}, 2));
}
BENCHMARK(BM_StandardModule)->DenseRange(2, 8);

static void BM_VerifyPresentation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verifyPresentation({n, n % 2}, 2));
}
BENCHMARK(BM_VerifyPresentation)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_CellCompare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compareCellToStandard(n, {2, 6}));
}
BENCHMARK(BM_CellCompare)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CanonicalBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(canonicalBasis(n, {-1, 0, 3}));
}
BENCHMARK(BM_CanonicalBasis)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_DecompositionCheck(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(checkDecompositionNumbers(10, e, (e + 1) / 2));
}
BENCHMARK(BM_DecompositionCheck)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
