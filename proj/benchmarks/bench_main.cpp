#include <benchmark/benchmark.h>

#include "lefcorr/complex_torus.hpp"
#include "lefcorr/cp1_bundle.hpp"
#include "lefcorr/smith.hpp"
#include "lefcorr/sweep.hpp"
#include "lefcorr/text_format.hpp"
#include "lefcorr/torus_smooth.hpp"

using namespace lefcorr;

static void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = parse_int_matrix("7,-3,2,9;1,4,-8,0;-6,5,3,2;2,-9,7,-4");
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm);

// Fixed-point enumeration dominates: |det(A - B)| points.
static void BM_TorusVerify(benchmark::State& state) {
  const long k = state.range(0);
  const IntMatrix a{{k, 1, 0}, {0, k, 1}, {1, 0, k}};
  const IntMatrix b = IntMatrix::identity(3);
  const torus::TorusCorrespondence corr(a, b, TorusPoint{Rational(1, 3), Rational(1, 5), Rational(1, 7)});
  for (auto _ : state) benchmark::DoNotOptimize(torus::verify_theorem(corr));
  state.counters["points"] = static_cast<double>(verify_theorem(corr).fixed_point_count);
}
BENCHMARK(BM_TorusVerify)->Arg(3)->Arg(8)->Arg(20);

static void BM_DiagonalIntegral(benchmark::State& state) {
  const auto corr = torus::TorusCorrespondence::parse("2,1,0,0;0,3,1,0;1,0,2,1;0,1,0,-2", "1,0,1,0;0,1,0,0;0,0,1,0;1,0,0,1", "0");
  for (auto _ : state) benchmark::DoNotOptimize(torus::diagonal_integral(corr));
}
BENCHMARK(BM_DiagonalIntegral);

static void BM_ComplexTorusVerify(benchmark::State& state) {
  const ctorus::ComplexTorusCorrespondence corr(ctorus::LatticeSpec::gaussian(), ExactScalar::gaussian(state.range(0), 2),
                                                ExactScalar::gaussian(-1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(ctorus::verify_conjecture1(corr));
}
BENCHMARK(BM_ComplexTorusVerify)->Arg(2)->Arg(5);

static void BM_Cp1Action(benchmark::State& state) {
  const cp1::BundleSelfMap m(parse_matrix("3/2,1;0,-5"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cp1::cohomology_action(m));
}
BENCHMARK(BM_Cp1Action)->Arg(4)->Arg(12)->Arg(32);

static void BM_SweepTorus(benchmark::State& state) {
  SweepConfig config;
  config.trials = 200;
  config.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config, nullptr));
}
BENCHMARK(BM_SweepTorus)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
