#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "equable/diophantine.hpp"
#include "equable/eisenstein.hpp"
#include "equable/intmath.hpp"
#include "equable/search.hpp"
#include "equable/triangle.hpp"

namespace {

using namespace equable;

void BM_integer_sqrt(benchmark::State& state) {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int64_t> dist(0, int64_t{1} << 62);
    std::vector<int64_t> inputs(1024);
    for (int64_t& v : inputs) v = dist(rng);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integer_sqrt(inputs[i]));
        i = (i + 1) & 1023;
    }
}
BENCHMARK(BM_integer_sqrt);

void BM_points_of_norm(benchmark::State& state) {
    const int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(points_of_norm(n));
    state.SetComplexityN(n);
}
BENCHMARK(BM_points_of_norm)->Arg(48)->Arg(300)->Arg(1200)->Complexity();

void BM_is_equable(benchmark::State& state) {
    std::mt19937_64 rng(98);
    std::uniform_int_distribution<int64_t> coeff(-50, 50);
    std::vector<LatticeTriangle> inputs(1024);
    for (LatticeTriangle& t : inputs)
        t = {{coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng)}};
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_equable(inputs[i]));
        i = (i + 1) & 1023;
    }
}
BENCHMARK(BM_is_equable);

void BM_enumerate_classes(benchmark::State& state) {
    SearchWindow window{state.range(0)};
    SearchOptions options;
    options.filter_sqrt3_norms = state.range(1) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_equable_classes(window, options));
}
BENCHMARK(BM_enumerate_classes)
    ->Args({100, 1})
    ->Args({100, 0})
    ->Args({300, 1})
    ->Args({300, 0});

void BM_uvw_bruteforce(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_uvw_bruteforce(state.range(0)));
}
BENCHMARK(BM_uvw_bruteforce)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
