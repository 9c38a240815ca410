#include <benchmark/benchmark.h>

#include "asdglue/rank_one.hpp"
#include "asdglue/solver.hpp"

namespace {

using namespace asdglue;

Mat3 sample_matrix(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat3 m;
  for (double& x : m.e) x = u(rng);
  return m;
}

void BM_Svd(benchmark::State& state) {
  Rng rng(1);
  const Mat3 m = sample_matrix(rng);
  for (auto _ : state) benchmark::DoNotOptimize(svd(m));
}
BENCHMARK(BM_Svd);

void BM_Rho(benchmark::State& state) {
  Rng rng(2);
  const UnitQuaternion g = sample_unit_quaternion(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rho(g));
}
BENCHMARK(BM_Rho);

void BM_SolveRankOne(benchmark::State& state) {
  Rng rng(3);
  const Mat3 m = sample_matrix(rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_rank_one(m));
}
BENCHMARK(BM_SolveRankOne);

void BM_OracleRankOne(benchmark::State& state) {
  const Mat3 m = Mat3::diag(3.0, 2.0, 1.0);
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_rank_one(m, static_cast<std::size_t>(state.range(0)), rng));
}
BENCHMARK(BM_OracleRankOne)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const TwoPointConfig cfg(0.05);
  const BackgroundField f = make_background(1, 2, 1.0, cfg);
  SolverConfig sc;
  sc.grid_density = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions(f, cfg, sc));
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_OracleEnumerate(benchmark::State& state) {
  const TwoPointConfig cfg(0.05);
  const BackgroundField f = make_background(1, 2, 1.0, cfg);
  OracleOptions opts;
  opts.n_starts = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_enumerate(f, cfg, {}, opts, rng));
}
BENCHMARK(BM_OracleEnumerate)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
