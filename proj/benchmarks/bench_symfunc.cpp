#include <benchmark/benchmark.h>

#include "ggp/symfunc.hpp"

namespace {

using ggp::Basis;

// The first iteration pays for the transition tables; later ones hit the cache.
void BM_ConvertSchurToMonomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ggp::SymFunc f = ggp::SymFunc::element(Basis::schur, ggp::Partition::row(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ggp::convert(f, Basis::monomial));
}
BENCHMARK(BM_ConvertSchurToMonomial)->DenseRange(4, 12, 4);

void BM_MultiplyInMonomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ggp::SymFunc f = ggp::SymFunc::element(Basis::monomial, ggp::Partition::row(n), 1);
  const ggp::SymFunc g = ggp::SymFunc::element(Basis::monomial, {2, 1}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_MultiplyInMonomial)->DenseRange(3, 7, 2);

void BM_Plethysm(benchmark::State& state) {
  const ggp::SymFunc f = ggp::SymFunc::element(Basis::schur, {3, 2, 1}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ggp::plethysm_pb(f, 2));
}
BENCHMARK(BM_Plethysm);

}  // namespace
