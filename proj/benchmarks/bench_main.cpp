#include <benchmark/benchmark.h>

#include <random>

#include "leghopf/classify.hpp"
#include "leghopf/exact.hpp"
#include "leghopf/families.hpp"
#include "leghopf/slopes.hpp"

using namespace leghopf;

namespace {

IntMatrix random_symmetric(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> v(-5, 5);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = v(rng);
    return m;
}

void BM_det(benchmark::State& st) {
    const auto m = random_symmetric(static_cast<std::size_t>(st.range(0)), 1);
    for (auto _ : st) benchmark::DoNotOptimize(exact::det(m));
}
BENCHMARK(BM_det)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_signature(benchmark::State& st) {
    const auto m = random_symmetric(static_cast<std::size_t>(st.range(0)), 2);
    for (auto _ : st) benchmark::DoNotOptimize(exact::signature(m));
}
BENCHMARK(BM_signature)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_cfrac(benchmark::State& st) {
    // Consecutive Fibonacci numbers give the longest expansions for their size.
    const Rational s(Int(-832040), Int(514229));
    for (auto _ : st) benchmark::DoNotOptimize(slopes::cfrac(s));
}
BENCHMARK(BM_cfrac);

void BM_count_tight_grid(benchmark::State& st) {
    const long long r = st.range(0);
    for (auto _ : st)
        for (long long a = -r; a <= r; ++a)
            for (long long b = -r; b <= r; ++b) benchmark::DoNotOptimize(slopes::count_tight(a, b));
}
BENCHMARK(BM_count_tight_grid)->Arg(8)->Arg(32);

void BM_strongly_exceptional_grid(benchmark::State& st) {
    for (auto _ : st)
        for (long long a = -8; a <= 8; ++a)
            for (long long b = -8; b <= 8; ++b) benchmark::DoNotOptimize(classify::strongly_exceptional(a, b));
}
BENCHMARK(BM_strongly_exceptional_grid);

void BM_family_verify(benchmark::State& st) {
    const auto grid = families::sweep_grid();
    for (auto _ : st)
        for (const auto& id : grid) benchmark::DoNotOptimize(families::verify(id).ok());
    st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * grid.size()));
}
BENCHMARK(BM_family_verify)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
