#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "seqcorr/field.hpp"
#include "seqcorr/zerocount.hpp"

using namespace seqcorr;

namespace {

std::vector<Elem> random_elems(const FieldCtx& F, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Elem> out(n);
    for (auto& e : out) e = Elem{rng() & F.order()};
    return out;
}

void BM_mul_table(benchmark::State& state) {
    const FieldCtx F = FieldCtx::build(static_cast<int>(state.range(0)));
    const auto xs = random_elems(F, 1024, 1);
    const auto ys = random_elems(F, 1024, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(F.mul(xs[i & 1023], ys[i & 1023]));
        ++i;
    }
}
BENCHMARK(BM_mul_table)->Arg(5)->Arg(9)->Arg(11);

void BM_mul_carryless(benchmark::State& state) {
    const FieldCtx F = FieldCtx::build(static_cast<int>(state.range(0)));
    const auto xs = random_elems(F, 1024, 1);
    const auto ys = random_elems(F, 1024, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(F.mul_carryless(xs[i & 1023], ys[i & 1023]));
        ++i;
    }
}
BENCHMARK(BM_mul_carryless)->Arg(5)->Arg(11)->Arg(13);

void BM_trace_mask(benchmark::State& state) {
    const FieldCtx F = FieldCtx::build(9);
    const auto xs = random_elems(F, 1024, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(F.trace_m(xs[i & 1023]));
        ++i;
    }
}
BENCHMARK(BM_trace_mask);

void BM_field_build(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(FieldCtx::build(k));
    }
}
BENCHMARK(BM_field_build)->Arg(5)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_affine_kernel_sweep(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const FieldCtx F = FieldCtx::build(k);
    const LParams lp = make_lparams(k, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(m_distribution(F, lp));
    }
}
BENCHMARK(BM_affine_kernel_sweep)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_linearized_kernel(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const FieldCtx F = FieldCtx::build(k);
    const LParams lp = make_lparams(k, 1);
    const auto elems = F.subfield_elements();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(linearized_kernel_l(F, lp, elems[i % elems.size()]));
        ++i;
    }
}
BENCHMARK(BM_linearized_kernel)->Arg(7)->Arg(9)->Arg(11);

}  // namespace
