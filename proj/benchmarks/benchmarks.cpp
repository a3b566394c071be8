#include <benchmark/benchmark.h>

#include "tracecodes/report.hpp"

using namespace tracecodes;

namespace {

CodeSpec spec_for(uint64_t p, uint64_t m, uint64_t N) {
    return derive_spec(FiniteField::make(p, m), N);
}

void BM_FieldMul(benchmark::State& state) {
    auto f = FiniteField::make(7, 2);
    uint64_t x = 1;
    for (auto _ : state) {
        x = f->mul_code(x, 3);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FieldMul);

void BM_FieldTrace(benchmark::State& state) {
    auto f = FiniteField::make(7, 2);
    uint64_t x = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f->trace_code(x));
        x = x % (f->q() - 1) + 1;
    }
}
BENCHMARK(BM_FieldTrace);

void BM_EvalCodeword(benchmark::State& state) {
    CodeSpec s = spec_for(7, 2, 3);
    RingElem a = ring_element_at(s.f(), 1234);
    for (auto _ : state) benchmark::DoNotOptimize(eval_codeword(s, a));
}
BENCHMARK(BM_EvalCodeword);

void BM_EnumerateSmall(benchmark::State& state) {
    CodeSpec s = spec_for(3, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_weights(s, WeightKind::LeeOverR));
}
BENCHMARK(BM_EnumerateSmall);

void BM_EnumerateLarge(benchmark::State& state) {
    CodeSpec s = spec_for(7, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_weights(s, WeightKind::LeeOverR));
}
BENCHMARK(BM_EnumerateLarge);

void BM_LeeWeightViaTheta(benchmark::State& state) {
    CodeSpec s = spec_for(7, 2, 3);
    RingElem a = ring_element_at(s.f(), 1234);
    for (auto _ : state) benchmark::DoNotOptimize(lee_weight_via_theta(s, a));
}
BENCHMARK(BM_LeeWeightViaTheta);

void BM_DualDistance(benchmark::State& state) {
    CodeSpec s = spec_for(3, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(dual_lee_distance_upto(s, 2));
}
BENCHMARK(BM_DualDistance);

void BM_GrayImage(benchmark::State& state) {
    CodeSpec s = spec_for(3, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(gray_image(s));
}
BENCHMARK(BM_GrayImage);

}  // namespace

BENCHMARK_MAIN();
