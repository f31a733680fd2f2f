#include <benchmark/benchmark.h>

#include "sextab/corpus.hpp"
#include "sextab/match.hpp"

using namespace sextab;

namespace {

void BM_RegularsSerial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::regulars_serial(static_cast<std::size_t>(st.range(0))));
}

void BM_RegularsParallel(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::regulars_parallel(static_cast<std::size_t>(st.range(0))));
}

const std::vector<CorpusEntry>& bases(std::size_t m) {
  static const auto b9 = kernels::regulars_serial(9);
  static const auto b14 = kernels::regulars_serial(14);
  return m == 9 ? b9 : b14;
}

void BM_FourthPowersSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::fourth_powers_serial(bases(9)));
}

void BM_FourthPowersParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::fourth_powers_parallel(bases(9)));
}

void BM_ProductsSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::products_serial(bases(14), 1, 59));
}

void BM_ProductsParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::products_parallel(bases(14), 1, 59));
}

const Corpus& regulars30() {
  static const Corpus c = enumerate_regulars(30);
  return c;
}

void BM_MatchSerial(benchmark::State& st) {
  auto p = parse_pattern("48.17.16.48$");
  for (auto _ : st) benchmark::DoNotOptimize(match(p, regulars30(), Exec::Serial));
}

void BM_MatchParallel(benchmark::State& st) {
  auto p = parse_pattern("48.17.16.48$");
  for (auto _ : st) benchmark::DoNotOptimize(match(p, regulars30(), Exec::Parallel));
}

}  // namespace

BENCHMARK(BM_RegularsSerial)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegularsParallel)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FourthPowersSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FourthPowersParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatchParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
