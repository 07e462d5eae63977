#include <benchmark/benchmark.h>

#include <random>

#include "qgames/emw_scheme.hpp"
#include "qgames/mw_scheme.hpp"
#include "qgames/nash_solver.hpp"

using namespace qgames;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

BimatrixGame random_game(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    std::vector<std::vector<PayoffPair>> payoffs(n, std::vector<PayoffPair>(m));
    for (auto& row : payoffs)
        for (auto& cell : row) cell = {dist(rng), dist(rng)};
    return BimatrixGame(std::move(payoffs));
}

void bm_mw_output_game(benchmark::State& state) {
    const BimatrixGame g({{{5, 3}, {1, 1}}, {{1, 1}, {3, 5}}});
    const CVector psi{{kInvSqrt2, 0}, {0, 0}, {0, 0}, {kInvSqrt2, 0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mw_output_game(g, psi));
    }
}
BENCHMARK(bm_mw_output_game);

void bm_emw_bimatrix(benchmark::State& state) {
    const BimatrixGame g({{{5, 3}, {1, 1}}, {{1, 1}, {3, 5}}});
    const CVector psi{{kInvSqrt2, 0}, {0, 0}, {0, 0}, {kInvSqrt2, 0}};
    const EmwConfig cfg(g, {psi});
    for (auto _ : state) {
        benchmark::DoNotOptimize(emw_bimatrix(cfg));
    }
}
BENCHMARK(bm_emw_bimatrix);

void bm_support_enumeration(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const BimatrixGame g = random_game(static_cast<std::size_t>(state.range(0)),
                                       static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(support_enumeration(g, g.n_rows()));
    }
}
BENCHMARK(bm_support_enumeration)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
