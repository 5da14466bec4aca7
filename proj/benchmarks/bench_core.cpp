#include <benchmark/benchmark.h>

#include <random>

#include "qslice/verify.hpp"

namespace {

using namespace qslice;

std::mt19937_64 g_rng(12345); // NOLINT

double uniform_component() { return static_cast<double>(g_rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; }

Quaternion random_quat() {
    return {uniform_component(), uniform_component(), uniform_component(), uniform_component()};
}

RegPoly random_poly(int degree) {
    std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
    for (auto& a : c) a = random_quat();
    return RegPoly(std::move(c));
}

void BM_star_mul(benchmark::State& state) {
    const RegPoly f = random_poly(static_cast<int>(state.range(0)));
    const RegPoly g = random_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(star_mul(f, g));
}
BENCHMARK(BM_star_mul)->Arg(4)->Arg(8)->Arg(16);

void BM_eval(benchmark::State& state) {
    const RegPoly f = random_poly(static_cast<int>(state.range(0)));
    const Quaternion q = random_quat();
    for (auto _ : state) benchmark::DoNotOptimize(eval(f, q));
}
BENCHMARK(BM_eval)->Arg(4)->Arg(8)->Arg(16);

void BM_symmetrization(benchmark::State& state) {
    const RegPoly f = random_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(symmetrization(f));
}
BENCHMARK(BM_symmetrization)->Arg(4)->Arg(8);

void BM_find_zeros(benchmark::State& state) {
    RegPoly f = RegPoly::constant(Quaternion::one());
    for (int m = 0; m < state.range(0); ++m) f = star_mul(f, RegPoly::linear_factor(random_quat()));
    for (auto _ : state) benchmark::DoNotOptimize(find_zeros(f));
}
BENCHMARK(BM_find_zeros)->Arg(2)->Arg(4);

void BM_min_modulus_probe(benchmark::State& state) {
    const RegPoly f = star_mul(RegPoly::linear_factor(Quaternion::i()),
                               RegPoly::linear_factor(Quaternion::j()));
    GridSpec region;
    region.radius = 2.0;
    region.points_per_axis = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(min_modulus_probe(f, region));
}
BENCHMARK(BM_min_modulus_probe)->Arg(9)->Arg(15);

} // namespace

BENCHMARK_MAIN();
