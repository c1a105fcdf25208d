#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "softcert/kernels.hpp"

namespace {

using namespace softcert;

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

// Batch of 50 rows through a 784 -> 100 dense layer, the training hot path.
template <bool Parallel>
void BM_GemmAbt(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0)), n = 100, k = 784;
    const auto a = random_values(m * k, 1), b = random_values(n * k, 2), bias = random_values(n, 3);
    std::vector<double> c(m * n);
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::gemm_abt(a, b, bias, c, m, n, k);
        else
            kernels::reference::gemm_abt(a, b, bias, c, m, n, k);
        benchmark::DoNotOptimize(c.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m * n * k));
}
BENCHMARK(BM_GemmAbt<false>)->Name("gemm_abt/reference")->Arg(1)->Arg(50)->Arg(200);
BENCHMARK(BM_GemmAbt<true>)->Name("gemm_abt/openmp")->Arg(1)->Arg(50)->Arg(200);

template <bool Parallel>
void BM_GemmAtbAcc(benchmark::State& state) {
    const std::size_t m = 50, n = 100, k = 784;
    const auto a = random_values(m * n, 4), b = random_values(m * k, 5);
    std::vector<double> c(n * k);
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::gemm_atb_acc(a, b, c, m, n, k);
        else
            kernels::reference::gemm_atb_acc(a, b, c, m, n, k);
        benchmark::DoNotOptimize(c.data());
    }
}
BENCHMARK(BM_GemmAtbAcc<false>)->Name("gemm_atb_acc/reference");
BENCHMARK(BM_GemmAtbAcc<true>)->Name("gemm_atb_acc/openmp");

// DeepPoly back-substitution step: 10 margin rows over a 784-wide box.
template <bool Parallel>
void BM_Concretize(benchmark::State& state) {
    const std::size_t rows = static_cast<std::size_t>(state.range(0)), n = 784;
    const auto m = random_values(rows * n, 6), constant = random_values(rows, 7);
    std::vector<double> lower = random_values(n, 8), upper(n), out(rows);
    for (std::size_t i = 0; i < n; ++i) upper[i] = lower[i] + 0.2;
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::concretize_lower(m, constant, lower, upper, out, rows, n);
        else
            kernels::reference::concretize_lower(m, constant, lower, upper, out, rows, n);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_Concretize<false>)->Name("concretize_lower/reference")->Arg(10)->Arg(100);
BENCHMARK(BM_Concretize<true>)->Name("concretize_lower/openmp")->Arg(10)->Arg(100);

template <bool Parallel>
void BM_IntervalAffine(benchmark::State& state) {
    const std::size_t n = 100, k = 784;
    const auto w = random_values(n * k, 9), bias = random_values(n, 10);
    std::vector<double> lower = random_values(k, 11), upper(k), ol(n), ou(n);
    for (std::size_t i = 0; i < k; ++i) upper[i] = lower[i] + 0.2;
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::interval_affine(w, bias, lower, upper, ol, ou, n, k);
        else
            kernels::reference::interval_affine(w, bias, lower, upper, ol, ou, n, k);
        benchmark::DoNotOptimize(ol.data());
    }
}
BENCHMARK(BM_IntervalAffine<false>)->Name("interval_affine/reference");
BENCHMARK(BM_IntervalAffine<true>)->Name("interval_affine/openmp");

}  // namespace

BENCHMARK_MAIN();
