#include <benchmark/benchmark.h>

#include "zpd/builders.hpp"
#include "zpd/properties.hpp"
#include "zpd/zerospans.hpp"

namespace {

// M2(F2[u]/u^k): dimension 4k, so k = 4 walks 2^16 points.
zpd::StructureAlgebra<zpd::PrimeField> local_matrices(std::int64_t k) {
  return zpd::mat_over(2, zpd::trunc(static_cast<std::size_t>(k), zpd::PrimeField(2)));
}

zpd::SpanStrategy strategy(bool packed, std::size_t workers) {
  auto s = zpd::SpanStrategy::exhaustive();
  s.packed = packed;
  s.workers = workers;
  return s;
}

void BM_ZeroPairSpanPacked(benchmark::State& state) {
  auto a = local_matrices(state.range(0));
  auto s = strategy(true, 1);
  for (auto _ : state) benchmark::DoNotOptimize(zpd::zero_pair_span(a, s));
}
BENCHMARK(BM_ZeroPairSpanPacked)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ZeroPairSpanGeneric(benchmark::State& state) {
  auto a = local_matrices(state.range(0));
  auto s = strategy(false, 1);
  for (auto _ : state) benchmark::DoNotOptimize(zpd::zero_pair_span(a, s));
}
BENCHMARK(BM_ZeroPairSpanGeneric)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ZeroPairSpanWorkers(benchmark::State& state) {
  auto a = local_matrices(4);
  auto s = strategy(true, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zpd::zero_pair_span(a, s));
}
BENCHMARK(BM_ZeroPairSpanWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Is2zpdLocalMatrices(benchmark::State& state) {
  auto a = local_matrices(state.range(0));
  auto s = strategy(true, 0);
  for (auto _ : state) benchmark::DoNotOptimize(zpd::is_2zpd(a, s));
}
BENCHMARK(BM_Is2zpdLocalMatrices)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Is2zpdMat3Gf3(benchmark::State& state) {
  auto a = zpd::mat(3, zpd::PrimeField(3));
  auto s = strategy(true, 0);
  for (auto _ : state) benchmark::DoNotOptimize(zpd::is_2zpd(a, s));
}
BENCHMARK(BM_Is2zpdMat3Gf3)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
