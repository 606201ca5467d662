// Parallel kernels against their serial twins. Arg 1 = parallel, 0 = serial.
#include <benchmark/benchmark.h>

#include "scc/catalog.hpp"
#include "scc/polygon.hpp"
#include "scc/thurston.hpp"

using namespace scc;

namespace {

const Catalog& catalog() {
    static const Catalog cat = build_catalog();
    return cat;
}

void BM_CertificateSweep(benchmark::State& st) {
    const Catalog& cat = catalog();
    for (auto _ : st) benchmark::DoNotOptimize(certificate_sweep(cat, 5, 1, st.range(0)));
}
BENCHMARK(BM_CertificateSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteForceIV(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(brute_force_minimal(PairType::IV, {}, st.range(0)));
}
BENCHMARK(BM_BruteForceIV)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Case3Sweep(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(case3_sweep(12, st.range(0), true));
}
BENCHMARK(BM_Case3Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IntersectionSweep(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(intersection_sweep(10, st.range(0)));
}
BENCHMARK(BM_IntersectionSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GrowthCheck(benchmark::State& st) {
    std::vector<int> ks;
    for (int k = 1; k <= 200; ++k) ks.push_back(k);
    IntGrid n = chain_intersection_matrix(3);
    for (auto _ : st) benchmark::DoNotOptimize(exponent_growth_check(n, 1, ks, st.range(0)));
}
BENCHMARK(BM_GrowthCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
