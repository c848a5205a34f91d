#include <benchmark/benchmark.h>

#include <random>

#include "coho/linalg.hpp"

// Parallel kernels against their serial references, on both scalar types.
// Rational entries are kept small at generation time; elimination then grows
// them, which is exactly the load the parallel row updates are meant for.

namespace {

using namespace coho;

Mat<Rationals> random_q(int rows, int cols, unsigned seed) {
    Rationals f;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Mat<Rationals> m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = Rationals::Elem(num(rng), den(rng));
    return m;
}

Mat<PrimeField> random_p(const PrimeField& f, int rows, int cols, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.p - 1);
    Mat<PrimeField> m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = pick(rng);
    return m;
}

void BM_reduce_q(benchmark::State& state) {
    auto m = random_q(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(reduce(m));
}

void BM_reduce_q_serial(benchmark::State& state) {
    auto m = random_q(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_serial(m));
}

void BM_reduce_p(benchmark::State& state) {
    PrimeField f(65521);
    auto m = random_p(f, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(reduce(m));
}

void BM_reduce_p_serial(benchmark::State& state) {
    PrimeField f(65521);
    auto m = random_p(f, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_serial(m));
}

void BM_matmul_q(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto x = random_q(n, n, 11);
    auto y = random_q(n, n, 13);
    for (auto _ : state) benchmark::DoNotOptimize(matmul(x, y));
}

void BM_matmul_q_serial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto x = random_q(n, n, 11);
    auto y = random_q(n, n, 13);
    for (auto _ : state) benchmark::DoNotOptimize(matmul_serial(x, y));
}

void BM_kron_q(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto x = random_q(n, n, 17);
    auto y = random_q(n, n, 19);
    for (auto _ : state) benchmark::DoNotOptimize(kron(x, y));
}

void BM_kron_q_serial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto x = random_q(n, n, 17);
    auto y = random_q(n, n, 19);
    for (auto _ : state) benchmark::DoNotOptimize(kron_serial(x, y));
}

BENCHMARK(BM_reduce_q)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduce_q_serial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduce_p)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduce_p_serial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_q)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul_q_serial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kron_q)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kron_q_serial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
