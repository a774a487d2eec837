#include <benchmark/benchmark.h>

#include "gdrs/code.hpp"
#include "gdrs/oracle.hpp"
#include "gdrs/peculiarity.hpp"

namespace {

using namespace gdrs;

void BM_BruteForce(benchmark::State& state) {
    const auto R = static_cast<std::uint32_t>(state.range(0));
    const auto mu = static_cast<std::uint32_t>(state.range(1));
    BruteForceOptions opts;
    opts.override_budget = true;
    for (auto _ : state) benchmark::DoNotOptimize(sum_peculiarity_table_bruteforce(R, mu, opts));
}
BENCHMARK(BM_BruteForce)->Args({16, 4})->Args({20, 6})->Args({24, 8})->Unit(benchmark::kMillisecond);

void BM_ProfileEngine(benchmark::State& state) {
    const auto ctx = RingContext::make(static_cast<std::uint32_t>(state.range(0)),
                                       static_cast<std::uint32_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(sum_peculiarity_profile_table(ctx));
}
BENCHMARK(BM_ProfileEngine)->Args({16, 4})->Args({20, 6})->Args({24, 8})->Args({256, 6})->Args({1024, 12});

void BM_ClosedForm(benchmark::State& state) {
    const auto ctx = RingContext::make(static_cast<std::uint32_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(sum_peculiarity_closed_form(ctx));
}
BENCHMARK(BM_ClosedForm)->Arg(12)->Arg(1024);

void BM_CosetWeight2(benchmark::State& state) {
    const auto c = GdrsCode::make(Field::make(static_cast<std::uint32_t>(state.range(0))), 7);
    const auto leader = CosetLeader2::make(1, 2, FieldElement{1}, FieldElement{2});
    for (auto _ : state) benchmark::DoNotOptimize(coset_wd_weight2(c, leader));
}
BENCHMARK(BM_CosetWeight2)->Arg(31)->Arg(128);

void BM_OracleFullCoset(benchmark::State& state) {
    const auto c = GdrsCode::make(Field::make(static_cast<std::uint32_t>(state.range(0))), 5);
    const auto leader = CosetLeader2::make(1, 2, FieldElement{1}, FieldElement{2});
    for (auto _ : state) benchmark::DoNotOptimize(oracle_full_coset_wd(c, leader));
}
BENCHMARK(BM_OracleFullCoset)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TwoRegular(benchmark::State& state) {
    const auto c = GdrsCode::make(Field::make(static_cast<std::uint32_t>(state.range(0))), 5);
    for (auto _ : state) benchmark::DoNotOptimize(check_2_regular(c));
}
BENCHMARK(BM_TwoRegular)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
