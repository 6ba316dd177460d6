#include <benchmark/benchmark.h>

#include "vvmf/bundle.hpp"
#include "vvmf/matrix.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/rep.hpp"

using namespace vvmf;

namespace {

void BM_SeriesMul(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  const QExp a = eisenstein(4, K), b = eisenstein(6, K);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(50)->Arg(100)->Arg(200);

void BM_Delta(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta(K));
}
BENCHMARK(BM_Delta)->Arg(100)->Arg(200);

void BM_EtaPow(benchmark::State& state) {
  const auto K = static_cast<std::size_t>(state.range(0));
  const QExp e = eta(K);
  for (auto _ : state) benchmark::DoNotOptimize(e.pow(24));
}
BENCHMARK(BM_EtaPow)->Arg(100)->Arg(200);

void BM_CycMatMul(benchmark::State& state) {
  const long n = state.range(0);
  std::vector<std::vector<Cyclotomic>> rows(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(Cyclotomic::root_of_unity(24, i * j + 1));
  }
  const CycMatrix a(rows);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_CycMatMul)->Arg(4)->Arg(8)->Arg(16);

void BM_GeneratorWeightsS7(benchmark::State& state) {
  const Repn r = Repn::from_permutations(7, {{1, 4}, {2, 7}, {3, 5}}, {{1, 7, 2, 5, 6}, {3, 4}}, true);
  const ClassFlags f = classify(r);
  for (auto _ : state) benchmark::DoNotOptimize(generator_weights(r, f));
}
BENCHMARK(BM_GeneratorWeightsS7)->Unit(benchmark::kMillisecond);

void BM_ClassifyS7(benchmark::State& state) {
  const Repn r = Repn::from_permutations(7, {{1, 4}, {2, 7}, {3, 5}}, {{1, 7, 2, 5, 6}, {3, 4}}, true);
  for (auto _ : state) benchmark::DoNotOptimize(classify(r));
}
BENCHMARK(BM_ClassifyS7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
