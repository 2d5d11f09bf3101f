// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include <dyts/metrics.hpp>
#include <dyts/problems.hpp>
#include <dyts/rng.hpp>

namespace {

using namespace dyts;

const ObjectiveSet& reference_front() {
    static const ObjectiveSet ref = sample_true_pf(Problem(ProblemId::UF1), 10000);
    return ref;
}

ObjectiveSet population(std::size_t n) {
    Rng rng(1, 0);
    ObjectiveSet s(n, Vec(2));
    for (auto& p : s) {
        p[0] = rng.uniform01();
        p[1] = 1.0 - p[0] + 0.05 * rng.uniform01();
    }
    return s;
}

std::vector<Vec> decisions(const Problem& p, std::size_t n) {
    Rng rng(2, 0);
    std::vector<Vec> xs(n, Vec(p.num_variables()));
    for (auto& x : xs) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = p.bounds().lower[j] + rng.uniform01() * (p.bounds().upper[j] - p.bounds().lower[j]);
        }
    }
    return xs;
}

void BM_IgdSerial(benchmark::State& state) {
    const auto sol = population(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::igd(sol, reference_front()));
}

void BM_IgdParallel(benchmark::State& state) {
    const auto sol = population(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(igd(sol, reference_front()));
}

void BM_MonteCarloHvSerial(benchmark::State& state) {
    const auto sol = population(300);
    const Vec ref{2.0, 2.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::hypervolume_monte_carlo(sol, ref, static_cast<std::size_t>(state.range(0)), 1));
    }
}

void BM_MonteCarloHvParallel(benchmark::State& state) {
    const auto sol = population(300);
    const Vec ref{2.0, 2.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hypervolume_monte_carlo(sol, ref, static_cast<std::size_t>(state.range(0)), 1));
    }
}

void BM_EvaluateSerial(benchmark::State& state) {
    const Problem p(ProblemId::WFG9);
    const auto xs = decisions(p, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(serial::evaluate_batch(p, xs));
}

void BM_EvaluateParallel(benchmark::State& state) {
    const Problem p(ProblemId::WFG9);
    const auto xs = decisions(p, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch(p, xs));
}

} // namespace

BENCHMARK(BM_IgdSerial)->Arg(100)->Arg(300);
BENCHMARK(BM_IgdParallel)->Arg(100)->Arg(300);
BENCHMARK(BM_MonteCarloHvSerial)->Arg(1 << 18)->Arg(1 << 20);
BENCHMARK(BM_MonteCarloHvParallel)->Arg(1 << 18)->Arg(1 << 20);
BENCHMARK(BM_EvaluateSerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_EvaluateParallel)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
