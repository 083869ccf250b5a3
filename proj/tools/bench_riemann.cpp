#include <benchmark/benchmark.h>

#include "qbeta/padic_oracle.hpp"

// Production kernel (incremental powers, parallel first coordinate) against
// the per-term reference. Same sums, same moduli, identical results.

namespace {

using namespace qbeta;

IntegrandSpec twisted_spec(unsigned n) {
    IntegrandSpec spec;
    spec.n = n;
    spec.factors = {WeightFactor{1, 0}};
    spec.x0 = Rational(0);
    return spec;
}

IntegrandSpec double_spec(unsigned n, long h) {
    IntegrandSpec spec;
    spec.n = n;
    spec.factors = {WeightFactor{1, h - 1}, WeightFactor{1, h - 2}};
    spec.x0 = Rational(0);
    return spec;
}

void BM_riemann_reference_r1(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    OracleConfig cfg;
    cfg.p = 3;
    const auto spec = twisted_spec(3);
    for (auto _ : state) {
        auto v = riemann_sum_reference(spec, cfg, N);
        benchmark::DoNotOptimize(v);
    }
}

void BM_riemann_parallel_r1(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    OracleConfig cfg;
    cfg.p = 3;
    const auto spec = twisted_spec(3);
    for (auto _ : state) {
        auto v = riemann_sum(spec, cfg, N);
        benchmark::DoNotOptimize(v);
    }
}

void BM_riemann_reference_r2(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    OracleConfig cfg;
    cfg.p = 3;
    const auto spec = double_spec(2, 3);
    for (auto _ : state) {
        auto v = riemann_sum_reference(spec, cfg, N);
        benchmark::DoNotOptimize(v);
    }
}

void BM_riemann_parallel_r2(benchmark::State& state) {
    const auto N = static_cast<unsigned>(state.range(0));
    OracleConfig cfg;
    cfg.p = 3;
    const auto spec = double_spec(2, 3);
    for (auto _ : state) {
        auto v = riemann_sum(spec, cfg, N);
        benchmark::DoNotOptimize(v);
    }
}

} // namespace

BENCHMARK(BM_riemann_reference_r1)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_riemann_parallel_r1)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_riemann_reference_r2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_riemann_parallel_r2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
