#include <benchmark/benchmark.h>

#include <random>

#include "vcn/minimality.hpp"
#include "vcn/moves.hpp"

using namespace vcn;

namespace {

LaurentPoly random_entry(std::mt19937_64& rng) {
    switch (rng() % 8) {
        case 0: return LaurentPoly(0);
        case 1: return LaurentPoly(1);
        case 2: return LaurentPoly(-1);
        case 3: return LaurentPoly::t();
        case 4: return -LaurentPoly::t();
        case 5: return LaurentPoly::t(-1);
        case 6: return LaurentPoly::t() - LaurentPoly(1);
        default: return LaurentPoly::s();
    }
}

PolyMatrix random_matrix(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_entry(rng);
    return m;
}

void BM_det_fraction_free(benchmark::State& state) {
    PolyMatrix m = random_matrix(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(det(m, DetMethod::FractionFree));
}
BENCHMARK(BM_det_fraction_free)->DenseRange(2, 8, 2);

void BM_det_cofactor(benchmark::State& state) {
    PolyMatrix m = random_matrix(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(det(m, DetMethod::Cofactor));
}
BENCHMARK(BM_det_cofactor)->DenseRange(2, 8, 2);

void BM_permanent(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rng() % 2;
    for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_permanent)->DenseRange(4, 16, 4);

void BM_zeta(benchmark::State& state) {
    DiagramCode code = random_diagram(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(0)), 1, 5);
    for (auto _ : state) benchmark::DoNotOptimize(zeta(code));
}
BENCHMARK(BM_zeta)->DenseRange(2, 10, 2);

void BM_certify(benchmark::State& state) {
    DiagramCode code = random_diagram(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(0)), 1, 5);
    for (auto _ : state) benchmark::DoNotOptimize(certify(code));
}
BENCHMARK(BM_certify)->DenseRange(2, 8, 2);

void BM_random_walk(benchmark::State& state) {
    DiagramCode code = random_diagram(4, 4, 1, 9);
    for (auto _ : state) benchmark::DoNotOptimize(random_walk(code, 20, 11));
}
BENCHMARK(BM_random_walk);

void BM_parse_serialize(benchmark::State& state) {
    std::string text = serialize(random_diagram(8, 8, 2, 3));
    for (auto _ : state) benchmark::DoNotOptimize(serialize(parse_code(text)));
}
BENCHMARK(BM_parse_serialize);

}  // namespace

BENCHMARK_MAIN();
