#include <benchmark/benchmark.h>

#include "cartansuper/bider.hpp"
#include "cartansuper/derivations.hpp"
#include "cartansuper/weights.hpp"

namespace {

using namespace cartansuper;

const AlgebraModel& special_p3() {
    static const AlgebraModel model =
        build_special_model(make_shape(2, 2, {1, 1}, 3));
    return model;
}

void BM_BuildWitt(benchmark::State& state) {
    const auto sh = make_shape(2, 2, {1, 1}, 3);
    for (auto _ : state) benchmark::DoNotOptimize(build_witt_model(sh));
}
BENCHMARK(BM_BuildWitt);

void BM_BuildSpecial(benchmark::State& state) {
    const auto sh = make_shape(2, 2, {1, 1}, 3);
    for (auto _ : state) benchmark::DoNotOptimize(build_special_model(sh));
}
BENCHMARK(BM_BuildSpecial);

void BM_BracketSweep(benchmark::State& state) {
    const AlgebraModel& S = special_p3();
    for (auto _ : state) {
        std::int64_t entries = 0;
        for (int a = 0; a < S.dim; ++a) {
            for (int b = 0; b < S.dim; ++b)
                entries += static_cast<std::int64_t>(S.bracket(a, b).size());
        }
        benchmark::DoNotOptimize(entries);
    }
}
BENCHMARK(BM_BracketSweep);

void BM_VerifyStructure(benchmark::State& state) {
    const AlgebraModel& S = special_p3();
    for (auto _ : state) benchmark::DoNotOptimize(verify_structure(S));
}
BENCHMARK(BM_VerifyStructure);

void BM_WeightDecomposition(benchmark::State& state) {
    const AlgebraModel& S = special_p3();
    for (auto _ : state) benchmark::DoNotOptimize(weight_decomposition(S));
}
BENCHMARK(BM_WeightDecomposition);

void BM_SolveDerivations(benchmark::State& state) {
    const AlgebraModel& S = special_p3();
    const int parity = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_superderivations(S, parity));
}
BENCHMARK(BM_SolveDerivations)->Arg(0)->Arg(1);

void BM_SolveBiderivations(benchmark::State& state) {
    const AlgebraModel& S = special_p3();
    const int parity = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_super_biderivations(S, parity));
}
BENCHMARK(BM_SolveBiderivations)->Arg(0)->Arg(1);

void BM_VerifyTheorem(benchmark::State& state) {
    const AlgebraModel& S = special_p3();
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(S));
}
BENCHMARK(BM_VerifyTheorem);

}  // namespace

BENCHMARK_MAIN();
