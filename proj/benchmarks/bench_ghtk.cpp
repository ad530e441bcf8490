#include <benchmark/benchmark.h>

#include "ghtk/borsuk.hpp"
#include "ghtk/correspondence.hpp"
#include "ghtk/generators.hpp"
#include "ghtk/solver.hpp"

namespace {

ghtk::FiniteMetricSpace space(std::size_t n, std::uint64_t seed,
                              ghtk::GenKind kind = ghtk::GenKind::euclidean) {
    ghtk::GenSpec s;
    s.kind = kind;
    s.n = n;
    s.seed = seed;
    return ghtk::generate(s);
}

void BM_GhExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    auto x = space(n, 1);
    auto y = space(m, 2);
    ghtk::SolverOptions opts;
    opts.allow_shortcuts = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(ghtk::gh_exact(x, y, opts).value);
}
BENCHMARK(BM_GhExact)->Args({5, 5})->Args({6, 6})->Args({6, 7})
    ->Unit(benchmark::kMillisecond);

void BM_GhExactParallel(benchmark::State& state) {
    auto x = space(6, 1);
    auto y = space(7, 2);
    ghtk::SolverOptions opts;
    opts.allow_shortcuts = false;
    opts.worker_count = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ghtk::gh_exact(x, y, opts).value);
}
BENCHMARK(BM_GhExactParallel)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateIrreducible(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        ghtk::for_each_irreducible(n, n + 1, [&](const auto&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateIrreducible)->Arg(4)->Arg(5)->Arg(6)
    ->Unit(benchmark::kMillisecond);

void BM_BorsukNumber(benchmark::State& state) {
    auto x = space(static_cast<std::size_t>(state.range(0)), 3,
                   ghtk::GenKind::synthetic);
    for (auto _ : state)
        benchmark::DoNotOptimize(ghtk::borsuk_number(x).number);
}
BENCHMARK(BM_BorsukNumber)->Arg(8)->Arg(12)->Arg(16);

void BM_Distortion(benchmark::State& state) {
    auto x = space(8, 4);
    auto y = space(8, 5);
    auto r = ghtk::Correspondence::identity(8);
    for (auto _ : state)
        benchmark::DoNotOptimize(ghtk::distortion(x, y, r));
}
BENCHMARK(BM_Distortion);

}  // namespace

BENCHMARK_MAIN();
