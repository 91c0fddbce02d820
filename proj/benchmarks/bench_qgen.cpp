#include <benchmark/benchmark.h>

#include "qgen/genocchi.hpp"
#include "qgen/qgamma.hpp"
#include "qgen/qzeta.hpp"

namespace {

void BM_PowerSeriesMul(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    qgen::QContext ctx(qgen::Rational(1, 2));
    const auto a = qgen::eq_series(ctx, order);
    const auto b = qgen::Eq_series(ctx, order);
    for (auto _ : state) {
        auto c = qgen::ps_mul(a, b);
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PowerSeriesMul)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_GenocchiTable(benchmark::State& state) {
    qgen::QContext ctx(qgen::Rational(2, 3));
    const unsigned alpha = static_cast<unsigned>(state.range(0));
    const unsigned order = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        auto table = qgen::genocchi_table(ctx, alpha, order);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_GenocchiTable)->Args({1, 8})->Args({1, 16})->Args({2, 16})->Args({3, 24});

void BM_GammaProduct(benchmark::State& state) {
    qgen::FloatContext fctx(qgen::Rational(1, 2), 128, qgen::Real("1e-20"));
    const qgen::Real x("2.5");
    for (auto _ : state) {
        auto v = qgen::qgamma_product(fctx, x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_GammaProduct);

void BM_GammaMeromorphic(benchmark::State& state) {
    qgen::FloatContext fctx(qgen::Rational(1, 2), 128, qgen::Real("1e-20"));
    const qgen::Real z("-2.5");
    for (auto _ : state) {
        auto v = qgen::qgamma_meromorphic(fctx, z);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_GammaMeromorphic);

void BM_ZetaNegInt(benchmark::State& state) {
    qgen::QContext ctx(qgen::Rational(2, 3));
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto v = qgen::qzeta_neg_int(ctx, n, qgen::Rational(1, 2), 2);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ZetaNegInt)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
