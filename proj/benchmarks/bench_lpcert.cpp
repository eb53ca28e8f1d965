// Microbenchmarks for the exact-arithmetic hot paths: the simplex solve,
// basic-solution enumeration, the Birkhoff decomposition, and rational rank.
// Inputs are seeded and built outside the timed loops.

#include <lpcert/birkhoff.hpp>
#include <lpcert/generate.hpp>
#include <lpcert/lp.hpp>
#include <lpcert/vertices.hpp>

#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

namespace {

using namespace lpcert;

void BM_solve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<LpProblem> probs;
    for (std::uint64_t seed = 1; seed <= 16; ++seed) {
        probs.push_back(generate_random_lp(seed, 3, n));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        SolveOutcome out = solve(probs[i]);
        benchmark::DoNotOptimize(out);
        i = (i + 1) % probs.size();
    }
}
BENCHMARK(BM_solve)->Arg(6)->Arg(12)->Arg(24);

void BM_enumerate_basic(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const LpProblem prob = generate_random_lp(7, 3, n);
    for (auto _ : state) {
        VertexSet vs = enumerate_basic(prob.A, prob.b);
        benchmark::DoNotOptimize(vs);
    }
}
BENCHMARK(BM_enumerate_basic)->Arg(6)->Arg(10)->Arg(14);

void BM_bvn_decompose(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DoublyStochastic ds = generate_random_ds(11, n);
    for (auto _ : state) {
        BvnDecomposition dec = bvn_decompose(ds);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_bvn_decompose)->Arg(3)->Arg(4)->Arg(5);

void BM_rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    // The stacked doubly stochastic system: 2n x n^2 with known rank 2n - 1.
    const RMatrix m = build_constraints(n).stacked();
    for (auto _ : state) {
        std::size_t r = rank(m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_rank)->Arg(3)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
