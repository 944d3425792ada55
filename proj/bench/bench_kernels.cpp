// Serial reference against the OpenMP kernels.

#include "toric/lattice.hpp"
#include "toric/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace toric;

namespace {

std::vector<IntegralConstraint> wedge(std::size_t d) {
    std::vector<IntegralConstraint> cons;
    for (std::size_t i = 0; i < d; ++i) {
        LatticePoint n(d);
        n[i] = 3;
        n[(i + 1) % d] = -1;
        cons.push_back({n, 1, false});
    }
    LatticePoint all(std::vector<std::int64_t>(d, 1));
    cons.push_back({all, 4, false});
    return cons;
}

Box cube(std::size_t d, std::int64_t r) {
    return {LatticePoint(std::vector<std::int64_t>(d, -r)), LatticePoint(std::vector<std::int64_t>(d, r))};
}

void BM_ScanSerial(benchmark::State &st) {
    auto d = static_cast<std::size_t>(st.range(0));
    auto box = cube(d, st.range(1));
    auto cons = wedge(d);
    for (auto _ : st) benchmark::DoNotOptimize(scan_box_serial(box, cons));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * box.count()));
}

void BM_ScanParallel(benchmark::State &st) {
    auto d = static_cast<std::size_t>(st.range(0));
    auto box = cube(d, st.range(1));
    auto cons = wedge(d);
    for (auto _ : st) benchmark::DoNotOptimize(scan_box_parallel(box, cons));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * box.count()));
}

TripleData orthant3() {
    auto s = make_semigroup({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto c = CartierData::create(s, 2, 1, {-1, -1, -1});
    return TripleData::create(c, MonomialIdeal::unit(s), Rational(0));
}

TripleData cone13(std::int64_t p) {
    auto s = make_semigroup({{1, 0}, {1, 3}});
    auto c = CartierData::create(s, p, 1, {-1, -2});
    return TripleData::create(c, MonomialIdeal::unit(s), Rational(0));
}

template <bool Parallel> void BM_BruteForce(benchmark::State &st) {
    auto tr = st.range(0) == 0 ? cone13(2) : orthant3();
    auto box = BoxSpec::for_triple(tr, st.range(0) == 0 ? 1 : 0);
    for (auto _ : st) {
        if constexpr (Parallel) benchmark::DoNotOptimize(brute_force_enumerate(tr, box, 3, 30));
        else benchmark::DoNotOptimize(brute_force_enumerate_serial(tr, box, 3, 30));
    }
}

} // namespace

BENCHMARK(BM_ScanSerial)->Args({2, 200})->Args({3, 40})->Args({4, 12})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ScanParallel)->Args({2, 200})->Args({3, 40})->Args({4, 12})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BruteForce<false>)->Name("BM_BruteForceSerial")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForce<true>)->Name("BM_BruteForceParallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
