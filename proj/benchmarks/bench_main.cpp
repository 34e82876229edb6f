#include <benchmark/benchmark.h>

#include "ghcat/catalog.hpp"
#include "ghcat/cuntz.hpp"
#include "ghcat/gauge.hpp"
#include "ghcat/orbit.hpp"
#include "ghcat/solver.hpp"

namespace {

using namespace ghcat;

void BM_ResidualEvaluation(benchmark::State& state) {
    const auto s = catalog_get("Z4-qsystem").triple;
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_residuals(s, 1e-9));
}
BENCHMARK(BM_ResidualEvaluation);

void BM_CanonicalGaugeKey(benchmark::State& state) {
    const auto s = catalog_get("Z2x2").triple;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_gauge_key(s));
}
BENCHMARK(BM_CanonicalGaugeKey);

void BM_GammaOrbit(benchmark::State& state) {
    const auto s = catalog_get("Z2x2").triple;
    const GammaGroup gamma(s.group);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_orbit(gamma, s, 1e-9));
}
BENCHMARK(BM_GammaOrbit);

void BM_FormalRhoSquared(benchmark::State& state) {
    const auto s = catalog_get("Z3-haagerup").triple;
    const Formal f(s);
    for (auto _ : state) benchmark::DoNotOptimize(f.rho(f.rho(f.gen_t(0))));
}
BENCHMARK(BM_FormalRhoSquared);

void BM_DegenerateSolve(benchmark::State& state) {
    const Group g({4});
    SolveOptions opts;
    opts.restarts = 40;
    for (auto _ : state) benchmark::DoNotOptimize(solve_degenerate(g, opts));
}
BENCHMARK(BM_DegenerateSolve);

}  // namespace

BENCHMARK_MAIN();
