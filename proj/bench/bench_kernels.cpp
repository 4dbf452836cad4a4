// Serial references against the OpenMP kernels. Run with OMP_NUM_THREADS set
// to compare scaling; results are identical for every thread count.

#include "ferrook/census.hpp"
#include "ferrook/construct.hpp"
#include "ferrook/rook.hpp"
#include "ferrook/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace ferrook;

namespace {

const FerrersDiagram kRookBoard({2, 3, 4, 5, 6, 7, 7, 8});
const FerrersDiagram kCensusBoard({1, 2, 3, 4, 4});

void BM_RookHistogramSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(serial::inv_histogram(kRookBoard, static_cast<int>(state.range(0))));
}
void BM_RookHistogramParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(inv_histogram(kRookBoard, static_cast<int>(state.range(0))));
}

void BM_CensusSerial(benchmark::State& state) {
    const FieldTable field(3);
    for (auto _ : state) benchmark::DoNotOptimize(serial::brute_force_census(kCensusBoard, field, 1u << 24));
}
void BM_CensusParallel(benchmark::State& state) {
    const FieldTable field(3);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_census(kCensusBoard, field, 1u << 24));
}

std::vector<SupportedMatrix> space_basis() {
    return build_space(FerrersDiagram({5, 5, 5, 5, 5, 5}), 4, FieldTable(4)).basis;
}

void BM_MinRankSerial(benchmark::State& state) {
    const auto basis = space_basis();
    const FieldTable field(4);
    for (auto _ : state) benchmark::DoNotOptimize(serial::min_rank(basis, field, 1u << 24));
}
void BM_MinRankParallel(benchmark::State& state) {
    const auto basis = space_basis();
    const FieldTable field(4);
    for (auto _ : state) benchmark::DoNotOptimize(min_rank(basis, field, 1u << 24));
}

}  // namespace

BENCHMARK(BM_RookHistogramSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RookHistogramParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinRankSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinRankParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
