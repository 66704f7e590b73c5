#include <benchmark/benchmark.h>

#include "besselkit/approx.hpp"
#include "besselkit/bessel.hpp"
#include "besselkit/fracmodes.hpp"
#include "besselkit/lambda_operator.hpp"
#include "besselkit/mittag_leffler.hpp"

using namespace besselkit;

static void BM_FamilyGenerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(family_generate(Family::Ba, 1.5, n));
}
BENCHMARK(BM_FamilyGenerate)->Arg(10)->Arg(20)->Arg(50);

static void BM_BesselJ(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bessel_j(2.5, x));
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(10)->Arg(45);

static void BM_Zeros(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const OrderContext order(0.75);  // fresh cache each round
        benchmark::DoNotOptimize(order.zero(k));
    }
}
BENCHMARK(BM_Zeros)->Arg(1)->Arg(20)->Arg(100);

static void BM_ApproxEval(benchmark::State& state) {
    const Approximation ba({Method::BaRescaled, 3.0, 10});
    const Approximation llg({Method::LLG, 3.0, 10});
    const bool use_llg = state.range(0) != 0;
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(use_llg ? llg(x) : ba(x));
        x = x < 40.0 ? x + 0.01 : 0.0;
    }
}
BENCHMARK(BM_ApproxEval)->Arg(0)->Arg(1);

static void BM_MittagLeffler(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0)) / 4.0;
    for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(0.6, z));
}
BENCHMARK(BM_MittagLeffler)->Arg(4)->Arg(20)->Arg(120);

static void BM_FracSeries(benchmark::State& state) {
    const FracSolver solver(FracProblem{0.5, 1.0, 1.0, 3, 1.0});
    const int modes = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solver.series(0.5, 100.0, modes));
}
BENCHMARK(BM_FracSeries)->Arg(100)->Arg(1000);

static void BM_FracAsymptotic(benchmark::State& state) {
    const FracSolver solver(FracProblem{0.5, 1.0, 1.0, 3, 1.0});
    for (auto _ : state) benchmark::DoNotOptimize(solver.asymptotic(0.5, 100.0));
}
BENCHMARK(BM_FracAsymptotic);
BENCHMARK_MAIN();
