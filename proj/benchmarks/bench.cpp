#include <benchmark/benchmark.h>

#include <superint/berezin.hpp>
#include <superint/supergroup.hpp>
#include <superint/supermatrix.hpp>
#include <superint/verify.hpp>

using namespace superint;

static void BM_Berezinian(benchmark::State &state)
{
    const auto p = static_cast<unsigned>(state.range(0)), q = static_cast<unsigned>(state.range(1));
    RandomSource rng(1);
    const auto x = rng.even_invertible(p, q, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(berezinian(x));
    }
}
BENCHMARK(BM_Berezinian)->Args({1, 1})->Args({2, 1})->Args({2, 2})->Args({3, 2});

static void BM_GrassmannProduct(benchmark::State &state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    RandomSource rng(2);
    const auto a = rng.grassmann(n, Parity::even, 3, 100), b = rng.grassmann(n, Parity::even, 3, 100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_GrassmannProduct)->Arg(4)->Arg(6)->Arg(8);

static void BM_PolynomialProduct(benchmark::State &state)
{
    const auto deg = static_cast<unsigned>(state.range(0));
    RandomSource rng(3);
    const auto a = rng.polynomial(3, deg, 3, 80), b = rng.polynomial(3, deg, 3, 80);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_PolynomialProduct)->Arg(2)->Arg(4)->Arg(6);

static void BM_Pullback(benchmark::State &state)
{
    const auto s = SuperDomainShape::make(2, 2);
    RandomSource rng(4);
    const auto x1 = SuperFunction::even_coordinate(s, 0), x2 = SuperFunction::even_coordinate(s, 1);
    const auto xi1 = SuperFunction::odd_coordinate(s, 0), xi2 = SuperFunction::odd_coordinate(s, 1);
    const SuperMorphism phi(s, s, {x1 + x2 * Rational(2) + xi1 * xi2, x2 + x1 * xi1 * xi2}, {xi1 + x1 * xi2, xi2});
    const auto f = rng.superfunction(s, static_cast<unsigned>(state.range(0)), 80);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pullback(phi, f));
    }
}
BENCHMARK(BM_Pullback)->Arg(2)->Arg(4);

static void BM_InvariantDensity(benchmark::State &state)
{
    const auto g = state.range(0) == 0 ? super_ax_plus_b() : gl11_chart();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_invariant_density(g, Side::left));
    }
}
BENCHMARK(BM_InvariantDensity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Suite(benchmark::State &state)
{
    const auto names = suite_names();
    const auto &name = names[static_cast<std::size_t>(state.range(0))];
    state.SetLabel(name);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(name));
    }
}
BENCHMARK(BM_Suite)->DenseRange(0, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
