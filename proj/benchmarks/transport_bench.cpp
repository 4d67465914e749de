#include <benchmark/benchmark.h>

#include <hopcum/hopcum.hpp>

using namespace hopcum;

namespace {

MultilinearSeries product_series(const ProbabilitySpace& p, std::size_t n) {
    MultilinearSeries s(p.space(), p.space(), n, 0);
    s.set_component(2, p.product());
    return s;
}

void BM_LiftProduct(benchmark::State& state) {
    const ProbabilitySpace p = matrix_trace_space(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const MultilinearSeries s = product_series(p, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lift_coderivation(s));
    }
}
BENCHMARK(BM_LiftProduct)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ExpProduct(benchmark::State& state) {
    const ProbabilitySpace p = matrix_trace_space(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const BlockMap a = lift_coderivation(product_series(p, n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_coderivation(a));
    }
}
BENCHMARK(BM_ExpProduct)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_InverseBySubstitution(benchmark::State& state) {
    const ProbabilitySpace p = finite_measure_space({Scalar(1, 3), Scalar(1, 3), Scalar(1, 3)});
    const auto n = static_cast<std::size_t>(state.range(0));
    const GaugeElement g = exp_coderivation(lift_coderivation(product_series(p, n)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(inverse_gauge_by_substitution(g));
    }
}
BENCHMARK(BM_InverseBySubstitution)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_CumulantRoutes(benchmark::State& state) {
    const ProbabilitySpace p = finite_measure_space({Scalar(1, 2), Scalar(1, 2)});
    const auto n = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        switch (state.range(0)) {
            case 0: benchmark::DoNotOptimize(cumulants_recursive(p, n)); break;
            case 1: benchmark::DoNotOptimize(cumulants_inversion(p, n)); break;
            default: benchmark::DoNotOptimize(ainfty_cumulants(p, n)); break;
        }
    }
    state.SetLabel(state.range(0) == 0 ? "recursive" : state.range(0) == 1 ? "inversion" : "ainfty");
}
BENCHMARK(BM_CumulantRoutes)->ArgsProduct({{0, 1, 2}, {4, 6}})->Unit(benchmark::kMillisecond);

void BM_VerifyRecipe(benchmark::State& state) {
    const auto recipes = bundled_recipes();
    const auto& [recipe, order] = recipes.at(static_cast<std::size_t>(state.range(0)));
    const ProbabilitySpace p = space_from_recipe(recipe).space;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_main_proposition(p, order));
    }
    state.SetLabel(recipe + " N=" + std::to_string(order));
}
BENCHMARK(BM_VerifyRecipe)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
