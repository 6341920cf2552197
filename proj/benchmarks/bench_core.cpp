#include "simplexeig/basins.hpp"
#include "simplexeig/oracle.hpp"
#include "simplexeig/rng.hpp"

#include <benchmark/benchmark.h>

using namespace simplexeig;

static void BM_ContractPow(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    const SimplexTensor t = make_simplex_tensor(n, d);
    Rng rng(1);
    const Eigen::VectorXd x = rng.unit_vector(n);
    for (auto _ : state) {
        auto y = contract_pow(t, x);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_ContractPow)->Args({3, 6})->Args({6, 9})->Args({12, 7});

static void BM_EnumerateEigenpairs(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto s = enumerate_eigenpairs(n, d);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_EnumerateEigenpairs)->Args({3, 4})->Args({4, 6})->Args({6, 8})->Unit(benchmark::kMicrosecond);

static void BM_TpiRun(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    const SimplexTensor t = make_simplex_tensor(n, d);
    const EigenStructure s = enumerate_eigenpairs(n, d);
    Rng rng(2);
    const Eigen::VectorXd x0 = rng.unit_vector(n);
    for (auto _ : state) {
        auto r = tpi_run(t, x0, {}, &s);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_TpiRun)->Args({2, 7})->Args({3, 6})->Unit(benchmark::kMicrosecond);

static void BM_SpectralRadius(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    Rng rng(3);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = 2.0 * rng.next_unit() - 1.0;
    for (auto _ : state) {
        auto rho = spectral_radius_sym(m);
        benchmark::DoNotOptimize(rho);
    }
}
BENCHMARK(BM_SpectralRadius)->Arg(3)->Arg(8)->Arg(12);

static void BM_OracleScan(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int grid = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto zeros = brute_force_zeros(n, 5, grid);
        benchmark::DoNotOptimize(zeros);
    }
}
BENCHMARK(BM_OracleScan)->Args({2, 1000})->Args({3, 200})->Unit(benchmark::kMillisecond);

static void BM_Rasterize(benchmark::State& state)
{
    for (auto _ : state) {
        auto map = rasterize(2, 7, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(map);
    }
}
BENCHMARK(BM_Rasterize)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
