#include <benchmark/benchmark.h>

#include "invchain/algebra/orbit.hpp"
#include "invchain/chain/express.hpp"
#include "invchain/chain/matrices.hpp"
#include "invchain/chain/mu.hpp"
#include "invchain/chain/pipeline.hpp"
#include "invchain/groebner/toric.hpp"
#include "invchain/lattice/normal_form.hpp"

using namespace invchain;

namespace {

const MonomialSpec& spec21() {
    static const MonomialSpec s = normalize_spec({2, 1});
    return s;
}

void BM_HnfKernelA(benchmark::State& state) {
    auto A = build_matrix_A(spec21(), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hnf(A));
}
BENCHMARK(BM_HnfKernelA)->DenseRange(3, 7);

void BM_SnfA(benchmark::State& state) {
    auto A = build_matrix_A(spec21(), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(snf(A));
}
BENCHMARK(BM_SnfA)->DenseRange(3, 7);

void BM_KernelBasisB(benchmark::State& state) {
    auto B = build_matrix_B(spec21(), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(B));
}
BENCHMARK(BM_KernelBasisB)->DenseRange(3, 6);

void BM_ToricA(benchmark::State& state) {
    auto A = build_matrix_A(spec21(), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(toric_ideal_from_matrix(A));
}
BENCHMARK(BM_ToricA)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_MuAll(benchmark::State& state) {
    const std::size_t n = state.range(0);
    auto ring = extended_ring(spec21(), n);
    for (auto _ : state)
        for (std::size_t i = 0; i < ring.size(); ++i)
            benchmark::DoNotOptimize(construct_mu(ring.variable(i), spec21(), n));
}
BENCHMARK(BM_MuAll)->DenseRange(4, 7);

void BM_OrbitRep(benchmark::State& state) {
    auto b = Binomial::parse("(3,9)*(7,9) - (3,7)*(9,7)");
    for (auto _ : state) benchmark::DoNotOptimize(canonical_orbit_rep(b));
}
BENCHMARK(BM_OrbitRep);

void BM_ChainGenerators(benchmark::State& state) {
    ChainOptions opts;
    opts.verify_at.clear();
    for (auto _ : state) benchmark::DoNotOptimize(chain_generators(spec21(), opts));
}
BENCHMARK(BM_ChainGenerators)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Express(benchmark::State& state) {
    std::vector<Binomial> G{Binomial::parse("(1,3)*(2,3) - (1,2)*(3,2)")};
    auto f = Binomial::parse("(3,9)*(7,9) - (3,7)*(9,7)");
    for (auto _ : state) benchmark::DoNotOptimize(express_equivariant(f, G, spec21(), 9));
}
BENCHMARK(BM_Express);

}  // namespace

BENCHMARK_MAIN();
