#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "seqcorr/expsums.hpp"
#include "seqcorr/sequences.hpp"
#include "seqcorr/verify.hpp"

using namespace seqcorr;

namespace {

void BM_walsh_transform(benchmark::State& state) {
    const std::size_t n = std::size_t{1} << state.range(0);
    std::mt19937_64 rng(1);
    std::vector<std::int64_t> data(n);
    for (auto& v : data) v = (rng() & 1) ? 1 : -1;
    for (auto _ : state) {
        std::vector<std::int64_t> work = data;
        walsh_hadamard_transform(work);
        benchmark::DoNotOptimize(work.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n));
}
BENCHMARK(BM_walsh_transform)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_s_all_wht(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const FieldCtx F = FieldCtx::build(k);
    const std::uint64_t d = valid_decimations(k).front().rep;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s_all_wht(F, d));
    }
}
BENCHMARK(BM_s_all_wht)->Arg(5)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_s_naive_full_sweep(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const FieldCtx F = FieldCtx::build(k);
    const std::uint64_t d = valid_decimations(k).front().rep;
    for (auto _ : state) {
        long long acc = 0;
        for (const Elem a : F.subfield_elements()) {
            if (a.bits != 0) acc += s_naive(F, d, a);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_s_naive_full_sweep)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_distribution_direct(benchmark::State& state) {
    const FieldCtx F = FieldCtx::build(7);  // k <= 7 takes the correlation path
    for (auto _ : state) {
        benchmark::DoNotOptimize(crosscorr_distribution(F, 15));
    }
}
BENCHMARK(BM_distribution_direct)->Unit(benchmark::kMillisecond);

void BM_search(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const FieldCtx F = FieldCtx::build(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_three_valued(F));
    }
}
BENCHMARK(BM_search)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace
