#include <benchmark/benchmark.h>

#include "ellwin/matcher.hpp"
#include "ellwin/mathieu.hpp"
#include "ellwin/oracle.hpp"
#include "ellwin/specfun.hpp"

using namespace ellwin;

static void BM_char_even(benchmark::State &state) {
  const double q = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_even(0, q).lambda);
}
BENCHMARK(BM_char_even)->Arg(1)->Arg(100)->Arg(10000);

static void BM_radial_ke(benchmark::State &state) {
  const auto sol = char_even(0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(radial_ke_scaled(sol, 0.7).value);
}
BENCHMARK(BM_radial_ke)->Arg(1)->Arg(100)->Arg(10000);

static void BM_bessel_sequence(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_k_scaled_sequence(200, 12.5).back());
}
BENCHMARK(BM_bessel_sequence);

static void BM_det_indicator(benchmark::State &state) {
  const auto p = make_problem(ellipse_from_axes(1.0, 0.6), 0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det_indicator(p, 0.7).log_magnitude);
}
BENCHMARK(BM_det_indicator)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_circular_ground(benchmark::State &state) {
  CircularProblem p;
  for (auto _ : state) benchmark::DoNotOptimize(circular_ground_energy(p).E);
}
BENCHMARK(BM_circular_ground)->Unit(benchmark::kMillisecond);

static void BM_ground_energy(benchmark::State &state) {
  SolverOptions o;
  o.n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ground_energy(1.0, 0.6, 0, o).E);
}
BENCHMARK(BM_ground_energy)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
