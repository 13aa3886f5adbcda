#include <benchmark/benchmark.h>

#include "toricode/bounds.hpp"
#include "toricode/codes.hpp"
#include "toricode/field.hpp"
#include "toricode/geometry.hpp"
#include "toricode/invariants.hpp"
#include "toricode/linalg.hpp"

namespace {

using namespace toricode;

void BM_FieldMul(benchmark::State& state) {
    FiniteField f(2, std::uint32_t(state.range(0)));
    FieldEnc a = 1, b = 2;
    for (auto _ : state) {
        a = f.mul(a, b);
        b = f.add(b, 1);
        if (b == 0) b = 2;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16);

void BM_TorusEnumeration(benchmark::State& state) {
    FiniteField f = field_of_order(std::uint32_t(state.range(0)));
    std::uint32_t s = std::uint32_t(state.range(1));
    for (auto _ : state) {
        ToricSet t = projective_torus(f, s);
        benchmark::DoNotOptimize(t.size());
    }
}
BENCHMARK(BM_TorusEnumeration)->Args({17, 3})->Args({7, 5})->Args({101, 2});

void BM_EvaluationMatrixRank(benchmark::State& state) {
    FiniteField f = field_of_order(std::uint32_t(state.range(0)));
    ToricSet t = projective_torus(f, std::uint32_t(state.range(1)));
    std::uint32_t d = std::uint32_t(state.range(2));
    for (auto _ : state) {
        EvaluationMatrix em = evaluation_matrix(t, d);
        benchmark::DoNotOptimize(gf_rank(em.entries));
    }
}
BENCHMARK(BM_EvaluationMatrixRank)->Args({7, 3, 4})->Args({5, 4, 3});

void BM_MinDistanceScan(benchmark::State& state) {
    FiniteField f = field_of_order(std::uint32_t(state.range(0)));
    ToricSet t = projective_torus(f, std::uint32_t(state.range(1)));
    EvaluationMatrix em =
        evaluation_matrix(t, std::uint32_t(state.range(2)));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_distance_oracle(em));
}
BENCHMARK(BM_MinDistanceScan)->Args({5, 3, 2})->Args({4, 3, 3});

void BM_ExtremalZeroCount(benchmark::State& state) {
    FiniteField f = field_of_order(std::uint32_t(state.range(0)));
    std::uint32_t s = std::uint32_t(state.range(1));
    std::uint32_t d = std::uint32_t(state.range(2));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_zeros_consistency(f, s, d));
}
BENCHMARK(BM_ExtremalZeroCount)->Args({7, 3, 4})->Args({5, 4, 5});

void BM_HilbertProfile(benchmark::State& state) {
    FiniteField f = field_of_order(std::uint32_t(state.range(0)));
    ToricSet t = projective_torus(f, std::uint32_t(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert_profile(t).regularity);
}
BENCHMARK(BM_HilbertProfile)->Args({7, 3})->Args({5, 4});

}  // namespace

BENCHMARK_MAIN();
