#include <benchmark/benchmark.h>

#include "corrineq/coefficients.hpp"
#include "corrineq/explorer.hpp"
#include "corrineq/functional.hpp"
#include "corrineq/rng.hpp"
#include "corrineq/series.hpp"

using namespace corrineq;

namespace {

FunctionalInstance make_chain_instance(int n, int N, uint64_t seed) {
    Space space = random_chain_space(N, derive_seed(seed, 1), 64);
    std::vector<MonotoneFn> fns;
    for (int i = 0; i < n; ++i)
        fns.push_back(random_monotone_fn(space, derive_seed(seed, 2 + (uint64_t)i), 64));
    return FunctionalInstance(std::move(space), std::move(fns));
}

void BM_en_chain(benchmark::State& state) {
    auto inst = make_chain_instance((int)state.range(0), 5, 42);
    for (auto _ : state) benchmark::DoNotOptimize(e_n(inst));
}
BENCHMARK(BM_en_chain)->Arg(3)->Arg(5)->Arg(7);

void BM_expand_en(benchmark::State& state) {
    ChainSpace space(3, {Rational(1, 4), Rational(1, 4), Rational(1, 2)});
    for (auto _ : state)
        benchmark::DoNotOptimize(expand_e_n(space, (int)state.range(0)));
}
BENCHMARK(BM_expand_en)->Arg(2)->Arg(3)->Arg(4);

void BM_corollary_direct(benchmark::State& state) {
    Space space = random_chain_space(4, 7, 64);
    std::vector<MonotoneFn> coeffs;
    int T = (int)state.range(0);
    for (int k = 0; k < T; ++k)
        coeffs.push_back(random_monotone_fn(space, (uint64_t)k + 1, 16));
    FunctionSeries p(space, T, std::move(coeffs));
    for (auto _ : state) benchmark::DoNotOptimize(corollary_direct(space, p));
}
BENCHMARK(BM_corollary_direct)->Arg(4)->Arg(6);

void BM_corollary_via_en(benchmark::State& state) {
    Space space = random_chain_space(4, 7, 64);
    std::vector<MonotoneFn> coeffs;
    int T = (int)state.range(0);
    for (int k = 0; k < T; ++k)
        coeffs.push_back(random_monotone_fn(space, (uint64_t)k + 1, 16));
    FunctionSeries p(space, T, std::move(coeffs));
    for (auto _ : state) benchmark::DoNotOptimize(corollary_via_en(space, p));
}
BENCHMARK(BM_corollary_via_en)->Arg(4)->Arg(6);

void BM_verify_e200(benchmark::State& state) {
    ChainSpace space(3, {Rational(1, 4), Rational(1, 4), Rational(1, 2)});
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_e200(space, (int)state.range(0)));
}
BENCHMARK(BM_verify_e200)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
