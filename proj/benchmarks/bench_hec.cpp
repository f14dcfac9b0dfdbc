#include <benchmark/benchmark.h>

#include "hec/characters.hpp"
#include "hec/cyclotomic.hpp"
#include "hec/ffcount.hpp"
#include "hec/strata.hpp"

using namespace hec;

static void BM_CyclotomicMul(benchmark::State& state) {
    auto a = CyclotomicNumber::embed(RootOfUnity(336, 5)) +
             CyclotomicNumber::embed(RootOfUnity(16, 3)).scaled(Rational(2, 3));
    auto b = CyclotomicNumber::embed(RootOfUnity(21, 2)) - CyclotomicNumber::one();
    for (auto _ : state) {
        auto c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CyclotomicMul);

static void BM_DimInvariants(benchmark::State& state) {
    Partition la(static_cast<int>(state.range(0)), 2, 0);
    for (auto _ : state) {
        EulerEngine engine;  // fresh engine: no cache reuse across iterations
        benchmark::DoNotOptimize(engine.dim_invariants(9, la));
    }
}
BENCHMARK(BM_DimInvariants)->Arg(4)->Arg(8);

static void BM_Table4(benchmark::State& state) {
    for (auto _ : state) {
        EulerEngine engine;
        Integer acc = 0;
        for (const auto& [la, expected] : table4_values()) acc += engine.euler_characteristic(la);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_Table4)->Unit(benchmark::kMillisecond);

static void BM_CensusQ3(benchmark::State& state) {
    for (auto _ : state) {
        Census c = run_census(3, 1);
        benchmark::DoNotOptimize(c.curves);
    }
}
BENCHMARK(BM_CensusQ3)->Unit(benchmark::kMillisecond);

static void BM_PointCount(benchmark::State& state) {
    const FieldTower tower = standard_tower(5);
    CurveEquation f;
    f.degree = 8;
    f.c = {1, 2, 3, 4, 0, 1, 2, 3, 1};
    for (auto _ : state) {
        long long n = point_count(tower, f, 3);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_PointCount);

BENCHMARK_MAIN();
