#include <benchmark/benchmark.h>

#include "cosecant/genseries.hpp"
#include "cosecant/partitions.hpp"
#include "cosecant/stirling.hpp"
#include "cosecant/symzeta.hpp"

namespace {

void BM_PartitionTable(benchmark::State& state) {
  const auto k_max = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cosecant::partition_table(k_max, cosecant::SeriesKind::cosecant));
  state.counters["partitions"] = static_cast<double>(cosecant::partition_count(k_max).get_ui());
}
BENCHMARK(BM_PartitionTable)->DenseRange(6, 20, 2)->Unit(benchmark::kMillisecond);

void BM_ExpLogOracle(benchmark::State& state) {
  const auto k_max = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cosecant::oracle_explog(k_max, cosecant::SeriesKind::cosecant));
}
BENCHMARK(BM_ExpLogOracle)->DenseRange(6, 20, 2)->Unit(benchmark::kMillisecond);

void BM_PartitionTableParallel(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cosecant::partition_table(18, cosecant::SeriesKind::cosecant, threads));
}
BENCHMARK(BM_PartitionTableParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CosecantValues(benchmark::State& state) {
  const auto k_max = static_cast<unsigned>(state.range(0));
  const cosecant::BigRational rho(2L * k_max);
  for (auto _ : state) benchmark::DoNotOptimize(cosecant::cosecant_values(rho, k_max));
}
BENCHMARK(BM_CosecantValues)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_StirlingNested(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cosecant::stirling1_nested(k, 6));
}
BENCHMARK(BM_StirlingNested)->DenseRange(8, 14, 2);

void BM_SymPoly(benchmark::State& state) {
  const auto v = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cosecant::sym_poly(v, v / 2));
}
BENCHMARK(BM_SymPoly)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
