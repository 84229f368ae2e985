#include <benchmark/benchmark.h>

#include "bchden/bch.hpp"
#include "bchden/numtheory.hpp"

using namespace bchden;

namespace {

void BM_WordDp(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Letter> letters(n, 0);
    for (std::size_t i = n / 2; i < n; ++i)
        letters[i] = (i % 3 == 0) ? 0 : 1;
    const Word w(letters);
    WordCoefficientEvaluator evaluate(n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate(w));
}
BENCHMARK(BM_WordDp)->DenseRange(8, 20, 4);

void BM_SeriesBackend(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bch_series(2, n));
}
BENCHMARK(BM_SeriesBackend)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_DegreeScan(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    ScanOptions options;
    options.backend = state.range(1) == 0 ? Backend::WordDp : Backend::Series;
    for (auto _ : state)
        benchmark::DoNotOptimize(degree_report(n, 2, options));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_DegreeScan)
    ->ArgsProduct({{8, 11, 14}, {0, 1}})
    ->ArgNames({"n", "series"})
    ->Unit(benchmark::kMillisecond);

void BM_DnBruteforce(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(dn_bruteforce(n));
}
BENCHMARK(BM_DnBruteforce)->DenseRange(10, 20, 5)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(common_denominator(n));
}
BENCHMARK(BM_ClosedForm)->Arg(20)->Arg(200)->Arg(2000);

} // namespace

BENCHMARK_MAIN();
