// Serial reference path against the OpenMP path, plus the two elimination routes.

#include "hairy/decompose.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

#include <random>

using namespace hairy;

namespace {

FunctorSpec spec_for(int which) {
    switch (which) {
        case 0:
            return {Functor::Omega, 3, HopfKind::Sym, Parity::none};
        case 1:
            return {Functor::HH, 3, HopfKind::Sym, Parity::none};
        default:
            return {Functor::Omega, 2, HopfKind::Tensor, Parity::none};
    }
}

void label(benchmark::State& state, const FunctorSpec& spec) {
    state.SetLabel(spec.key() + " degree " + std::to_string(state.range(1)));
}

void BM_DecomposeSerial(benchmark::State& state) {
    const auto spec = spec_for(static_cast<int>(state.range(0)));
    const int degree = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_serial(spec, degree));
    }
    label(state, spec);
}

void BM_DecomposeParallel(benchmark::State& state) {
    const auto spec = spec_for(static_cast<int>(state.range(0)));
    const int degree = static_cast<int>(state.range(1));
    DecomposeOptions options;
    options.jobs = omp_get_max_threads();
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(spec, degree, options));
    }
    label(state, spec);
    state.counters["threads"] = options.jobs;
}

SparseMatrix random_matrix(std::uint32_t n, double density) {
    std::mt19937_64 rng(n);
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> value(-3, 3);
    SparseMatrix m(n);
    for (std::uint32_t r = 0; r < n; ++r) {
        SparseRow row;
        for (std::uint32_t c = 0; c < n; ++c) {
            if (keep(rng)) {
                row.emplace_back(c, Rational(value(rng)));
            }
        }
        m.add_row(std::move(row));
    }
    return m;
}

void BM_RankFractionFree(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::uint32_t>(state.range(0)), 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(m));
    }
}

void BM_RankRational(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::uint32_t>(state.range(0)), 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_rational(m));
    }
}

}  // namespace

BENCHMARK(BM_DecomposeSerial)->Args({0, 6})->Args({1, 7})->Args({2, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeParallel)->Args({0, 6})->Args({1, 7})->Args({2, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankFractionFree)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankRational)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
