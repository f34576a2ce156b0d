#include <benchmark/benchmark.h>

#include "cospec/catalan.hpp"
#include "cospec/euler_product.hpp"
#include "cospec/graph_polynomials.hpp"
#include "cospec/moments.hpp"
#include "cospec/simulator.hpp"

using namespace cospec;

namespace {

const PrimeTable& primes() {
    static const PrimeTable table = sieve_primes(1'000'000);
    return table;
}

void BM_ShapeCensus(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(shape_census(k));
}
BENCHMARK(BM_ShapeCensus)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_VisibleMoments(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(visible_moments(k, primes()));
}
BENCHMARK(BM_VisibleMoments)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_InvisibleMoments(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        AValueCache cache(primes());
        benchmark::DoNotOptimize(invisible_moments(k, cache));
    }
}
BENCHMARK(BM_InvisibleMoments)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

void BM_SievePrimes(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(state.range(0)));
}
BENCHMARK(BM_SievePrimes)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_EulerProduct(benchmark::State& state) {
    const auto q = q_polynomial(Forest(4, {{0, 1}, {1, 2}, {2, 3}}));
    for (auto _ : state) benchmark::DoNotOptimize(euler_product(q, primes()));
}
BENCHMARK(BM_EulerProduct)->Unit(benchmark::kMillisecond);

void BM_GenerateMatrix(benchmark::State& state) {
    EnsembleSpec spec;
    spec.n = static_cast<int>(state.range(0));
    spec.mask = Mask::visible;
    for (auto _ : state) benchmark::DoNotOptimize(generate_matrix(spec, 0));
}
BENCHMARK(BM_GenerateMatrix)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Eigenvalues(benchmark::State& state) {
    EnsembleSpec spec;
    spec.n = static_cast<int>(state.range(0));
    const auto a = generate_matrix(spec, 0);
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(a));
}
BENCHMARK(BM_Eigenvalues)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
