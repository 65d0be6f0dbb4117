#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fracdiff/caputo.hpp"
#include "fracdiff/scheme.hpp"
#include "fracdiff/tridiagonal.hpp"
#include "fracdiff/types.hpp"

namespace {

// History with `levels` stored steps on a geometric-ish random mesh.
struct HistoryFixture {
    fracdiff::TemporalMesh mesh;
    fracdiff::SolutionHistory history;

    HistoryFixture(std::size_t levels, std::size_t n_nodes)
        : history(n_nodes) {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> dt_dist(1e-4, 2e-2);
        std::uniform_real_distribution<double> val(-1.0, 1.0);
        for (std::size_t m = 0; m <= levels; ++m) {
            if (m > 0) {
                mesh.append(dt_dist(rng));
            }
            std::vector<double> u(n_nodes);
            for (double& x : u) {
                x = val(rng);
            }
            history.append(std::move(u));
        }
    }
};

void BM_MemoryOperator(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    HistoryFixture fx(n, 101);
    const auto weights = fracdiff::compute_weights(fx.mesh, n, 0.5);
    for (auto _ : state) {
        auto m = fracdiff::memory_operator(fx.history, weights, n);
        benchmark::DoNotOptimize(m);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MemoryOperator)->RangeMultiplier(2)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_ComputeWeights(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    HistoryFixture fx(n, 3);
    for (auto _ : state) {
        auto w = fracdiff::compute_weights(fx.mesh, n, 0.5);
        benchmark::DoNotOptimize(w);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeWeights)->RangeMultiplier(2)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_ThomasSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> m_vec(n, 1.0);
    std::vector<double> f(n, 0.0);
    const auto sys = fracdiff::build_system(1.5, m_vec, f, 0.0, 0.0);
    for (auto _ : state) {
        auto x = fracdiff::thomas_solve(sys);
        benchmark::DoNotOptimize(x);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThomasSolve)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_FullRun(benchmark::State& state) {
    const auto steps = static_cast<std::size_t>(state.range(0));
    fracdiff::ProblemSpec problem;
    problem.gamma = 0.5;
    problem.ic = [](double x) { return std::sin(std::numbers::pi * x); };
    const fracdiff::SpatialGrid grid = fracdiff::make_grid(0.0, 1.0, 100);
    const auto policy = fracdiff::TimestepPolicy::fixed_step(1.0 / static_cast<double>(steps));
    for (auto _ : state) {
        auto rr = fracdiff::run(problem, grid, policy, 1.0);
        benchmark::DoNotOptimize(rr);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FullRun)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
