#include <benchmark/benchmark.h>

#include <random>

#include "gaingraph/bounds.hpp"
#include "gaingraph/ensemble.hpp"
#include "gaingraph/generators.hpp"
#include "gaingraph/matrices.hpp"
#include "gaingraph/spectra.hpp"
#include "gaingraph/switching.hpp"

using namespace gaingraph;

namespace {

HermitianMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    HermitianMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set(i, j, Complex(u(rng), i == j ? 0.0 : u(rng)));
    return m;
}

void BM_EigenValues(benchmark::State& state) {
    const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)), 1);
    EigenOptions o;
    o.keep_eigenvectors = false;
    for (auto _ : state) benchmark::DoNotOptimize(eigen_hermitian(m, o));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigenValues)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oNCubed);

void BM_EigenVectors(benchmark::State& state) {
    const auto m = random_hermitian(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(eigen_hermitian(m));
}
BENCHMARK(BM_EigenVectors)->RangeMultiplier(2)->Range(4, 64);

void BM_CycleLaplacian(benchmark::State& state) {
    const auto c = cycle_graph(static_cast<std::size_t>(state.range(0)), Gain::rational(1, 5));
    for (auto _ : state) benchmark::DoNotOptimize(eigen_hermitian(laplacian(c)));
}
BENCHMARK(BM_CycleLaplacian)->Arg(16)->Arg(50);

void BM_BalanceCertificate(benchmark::State& state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(balance_certificate(g));
}
BENCHMARK(BM_BalanceCertificate)->Arg(32)->Arg(256);

void BM_VerifyAll(benchmark::State& state) {
    const auto g = ensemble_instance(static_cast<std::uint64_t>(state.range(0)), true).graph;
    state.counters["n"] = static_cast<double>(g.vertex_count());
    state.counters["m"] = static_cast<double>(g.edge_count());
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(g));
}
BENCHMARK(BM_VerifyAll)->Arg(3)->Arg(17)->Arg(42);

}  // namespace

BENCHMARK_MAIN();
