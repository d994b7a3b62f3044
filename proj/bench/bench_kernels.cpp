// Serial vs OpenMP timings for the hot kernels. Run with --benchmark_filter
// to pick a subset; OMP_NUM_THREADS controls the parallel variants.

#include <benchmark/benchmark.h>

#include <random>

#include "singideal/coset_groupoid.hpp"
#include "singideal/ideal.hpp"
#include "singideal/norms.hpp"
#include "singideal/random.hpp"

using namespace singideal;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

RationalMatrix stacked_quasi_regular(std::size_t n) {
    // linearized quasi-regular rows for S_n over the class of a transposition
    const FiniteGroup g = symmetric(n);
    const Subgroup t = subgroup_generated(g, std::vector<Element>{1});
    const SubgroupFamily family = conjugation_closure(g, std::span<const Subgroup>(&t, 1));
    std::vector<RationalVector> rows;
    for (const auto& x : family) {
        std::vector<RationalMatrix> images;
        for (Element h = 0; h < g.order(); ++h) images.push_back(quasi_regular_matrix(g, x, h));
        const std::size_t k = images.front().rows();
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; j += 7) {
                RationalVector row(g.order());
                for (Element h = 0; h < g.order(); ++h) row[h] = images[h](i, j);
                rows.push_back(std::move(row));
            }
        }
    }
    return stack(rows, g.order());
}

RationalMatrix random_dense(std::size_t rows, std::size_t cols) {
    RationalSampler rng(1);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.next();
    }
    return m;
}

const CosetGroupoid& s5_groupoid() {
    static const CosetGroupoid cg = [] {
        const FiniteGroup g = symmetric(5);
        const Subgroup t = subgroup_generated(g, std::vector<Element>{1});
        return build_coset_groupoid(g, conjugation_closure(g, std::span<const Subgroup>(&t, 1)));
    }();
    return cg;
}

const CosetGroupoid& s5_group() {
    static const CosetGroupoid cg = [] {
        const FiniteGroup g = symmetric(5);
        return build_coset_groupoid(g, SubgroupFamily({make_subgroup(g, {0})}));
    }();
    return cg;
}

void BM_EchelonQuasiRegular(benchmark::State& state) {
    const RationalMatrix m = stacked_quasi_regular(5);
    for (auto _ : state) benchmark::DoNotOptimize(echelon_form(m, exec_of(state)));
    state.counters["rows"] = static_cast<double>(m.rows());
}

void BM_EchelonDense(benchmark::State& state) {
    const RationalMatrix m = random_dense(60, 60);
    for (auto _ : state) benchmark::DoNotOptimize(echelon_form(m, exec_of(state)));
}

void BM_Convolve(benchmark::State& state) {
    const FiniteGroupoid& g = s5_groupoid().groupoid;
    RationalSampler rng(2);
    const auto f1 = random_function(g, rng), f2 = random_function(g, rng);
    for (auto _ : state) benchmark::DoNotOptimize(convolve(g, f1, f2, exec_of(state)));
    state.counters["arrows"] = static_cast<double>(g.arrow_count());
}

void BM_RegularRep(benchmark::State& state) {
    const FiniteGroupoid& g = s5_group().groupoid;
    RationalSampler rng(3);
    const auto f = random_function(g, rng);
    for (auto _ : state) benchmark::DoNotOptimize(regular_rep_matrix(g, f, 0, exec_of(state)));
}

void BM_PowerIteration(benchmark::State& state) {
    const FiniteGroupoid& g = s5_group().groupoid;
    RationalSampler rng(4);
    const FloatMatrix m = regular_rep_matrix(g, random_function(g, rng), 0);
    for (auto _ : state) benchmark::DoNotOptimize(power_iteration_norm(m, default_power_tol, exec_of(state)));
}

void BM_ReducedNorm(benchmark::State& state) {
    const FiniteGroupoid& g = s5_groupoid().groupoid;
    RationalSampler rng(5);
    const auto f = random_function(g, rng);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_norm(g, f, default_power_tol, exec_of(state)));
    state.counters["units"] = static_cast<double>(g.unit_count());
}

}  // namespace

// Arg(0) is the serial reference path, Arg(1) the OpenMP path.
BENCHMARK(BM_EchelonQuasiRegular)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EchelonDense)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Convolve)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RegularRep)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PowerIteration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducedNorm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
