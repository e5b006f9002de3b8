#include <benchmark/benchmark.h>

#include "ggp/gelfand_graev.hpp"

namespace {

void BM_RhoRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::rho(n));
}
BENCHMARK(BM_RhoRecurrence)->DenseRange(4, 12, 4);

void BM_RhoViaHL(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::rho_via_hl(n));
}
BENCHMARK(BM_RhoViaHL)->DenseRange(4, 12, 4);

void BM_RhoViaM(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::rho_via_m(n));
}
BENCHMARK(BM_RhoViaM)->DenseRange(4, 12, 4);

void BM_RhoViaTheta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::rho_via_theta(n));
}
BENCHMARK(BM_RhoViaTheta)->DenseRange(4, 12, 4);

// [h_{1^n}] rho_n walks the whole recurrence; [h_(n)] would be the base case.
void BM_RhoCoeffColumn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ggp::Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::rho_coeff(n, column));
}
BENCHMARK(BM_RhoCoeffColumn)->DenseRange(4, 16, 4);

void BM_ToRhoBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ggp::SymFunc f = ggp::SymFunc::element(ggp::Basis::complete, ggp::Partition::row(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ggp::to_rho_basis(f, 2));
}
BENCHMARK(BM_ToRhoBasis)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
