#include <benchmark/benchmark.h>

#include "mgonal/escalator.hpp"
#include "mgonal/lattice.hpp"
#include "mgonal/localdensity.hpp"

using namespace mgonal;

static void BM_RepresentedSet(benchmark::State& state) {
  const PolygonalForm form(5, {1, 1, 2, 3, 5, 8});
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(represented_set(form, bound).count());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RepresentedSet)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

static void BM_BuildTree(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tree(m, 64, 100000).node_count());
}
BENCHMARK(BM_BuildTree)->Arg(4)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_DepthFourTree(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_tree(static_cast<int>(state.range(0)), 4, 100000).node_count());
}
BENCHMARK(BM_DepthFourTree)->Arg(7)->Arg(12)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_RepresentationCount(benchmark::State& state) {
  const PolygonalForm form(7, {1, 1, 2, 3});
  const auto x = lattice_from_form(form);
  const auto h = h_of_ell(form, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(representation_count(x, h));
}
BENCHMARK(BM_RepresentationCount)->Arg(100)->Arg(1000);

static void BM_YangOdd(benchmark::State& state) {
  const auto jd = jordan_decompose(7, std::vector<std::uint32_t>{1, 1, 2, 7, 7, 14});
  const Rational h(3 * 7 * 7 * 7);
  for (auto _ : state) benchmark::DoNotOptimize(yang_density_odd(jd, h).value);
}
BENCHMARK(BM_YangOdd);

static void BM_YangTwo(benchmark::State& state) {
  const auto jd = jordan_decompose(2, std::vector<std::uint32_t>{1, 1, 2, 4, 4, 8});
  const Rational h(3 * 64);
  for (auto _ : state) benchmark::DoNotOptimize(yang_density_two(jd, h).value);
}
BENCHMARK(BM_YangTwo);

static void BM_OracleStabilized(benchmark::State& state) {
  const auto p = state.range(0);
  const ShiftedDiagonalLattice x({1, 2, 3, 5, 7, 11}, 0, 1);
  for (auto _ : state) {
    CountingOracle oracle(p, x);
    benchmark::DoNotOptimize(oracle.stabilized(Rational(8 * p)).density.value);
  }
}
BENCHMARK(BM_OracleStabilized)->Arg(2)->Arg(3)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_TauGaussSum(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tau_gauss_sum(3, t, 2, 9, 4));
}
BENCHMARK(BM_TauGaussSum)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();
