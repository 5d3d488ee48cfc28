#include <benchmark/benchmark.h>

#include <vector>

#include "mixmult/config.hpp"
#include "mixmult/monomial.hpp"
#include "mixmult/multiplicity.hpp"
#include "mixmult/oracle.hpp"
#include "mixmult/toric.hpp"
#include "mixmult/zariski.hpp"

namespace {

using namespace mixmult;

// Chain of (-2)-curves ending in a (-1)-curve; D = E_1.
ValidatedConfig chain(std::size_t s) {
  Matrix<std::int64_t> g(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    g(i, i) = i + 1 == s ? -1 : -2;
    if (i + 1 < s) g(i, i + 1) = g(i + 1, i) = 1;
  }
  return ValidatedConfig(ExceptionalConfig::single_branch(std::move(g)));
}

void BM_Decompose(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const ValidatedConfig config = chain(s);
  const QDivisor d = QDivisor::prime(s, 0);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(config, d));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(2, 32);

void BM_BruteForceDecompose(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const ValidatedConfig config = chain(s);
  const QDivisor d = QDivisor::prime(s, 0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_decompose(config, d));
}
BENCHMARK(BM_BruteForceDecompose)->DenseRange(2, 10, 4);

void BM_Colength(benchmark::State& state) {
  const MonomialValuation nu(3, 5);
  const auto ideal = val_ideal(nu, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(colength(ideal));
}
BENCHMARK(BM_Colength)->RangeMultiplier(10)->Range(10, 100000);

void BM_ColengthSequence(benchmark::State& state) {
  OracleFiltrationSpec spec{{{MonomialValuation(2, 3), 1}, {MonomialValuation(3, 5), 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(colength_sequence(spec, state.range(0)));
}
BENCHMARK(BM_ColengthSequence)->Arg(50)->Arg(200)->Arg(500);

void BM_MixedPolyOracle(benchmark::State& state) {
  const std::vector<OracleFiltrationSpec> specs{{{{MonomialValuation(1, 1), 1}}}, {{{MonomialValuation(1, 2), 1}}}};
  const auto grid = default_grid(2);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_poly_oracle(specs, grid, state.range(0)));
}
BENCHMARK(BM_MixedPolyOracle)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_Truncate(benchmark::State& state) {
  const OracleFiltrationSpec spec{{{MonomialValuation(1, 2), 1}}};
  for (auto _ : state) benchmark::DoNotOptimize(truncate(spec, state.range(0)).colengths(200));
}
BENCHMARK(BM_Truncate)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ToricConfig(benchmark::State& state) {
  const std::vector<MonomialValuation> targets{MonomialValuation(34, 55), MonomialValuation(5, 7)};
  for (auto _ : state) benchmark::DoNotOptimize(toric_config(targets));
}
BENCHMARK(BM_ToricConfig);

}  // namespace
BENCHMARK_MAIN();
