#include <benchmark/benchmark.h>

#include "knotsig/cover.hpp"
#include "knotsig/gassner.hpp"
#include "knotsig/linksig.hpp"
#include "knotsig/maslov.hpp"
#include "knotsig_cli/verify.hpp"

using namespace knotsig;

namespace {

// Random endomorphism on `strands` one-colored strands with `len` letters.
BraidWord bench_word(int strands, int len) {
  cli::Rng rng(17);
  Coloring c = cli::random_coloring(rng, strands, 1, true);
  return cli::random_endomorphism(rng, c, len, len);
}

const TorusPoint kPoint = TorusPoint::parse("2/7");

template <class S>
void BM_BurauMatrix(benchmark::State& state) {
  BraidWord w = bench_word(static_cast<int>(state.range(0)), 4 * static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(burau_matrix<S>(w, kPoint));
}

template <class S>
void BM_BraidSignature(benchmark::State& state) {
  BraidWord w = bench_word(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(braid_signature<S>(w, kPoint));
  state.SetComplexityN(state.range(0));
}

void BM_SeifertSignature(benchmark::State& state) {
  BraidWord w = bench_word(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(seifert_signature<cx128>(w, kPoint));
  state.SetComplexityN(state.range(0));
}

void BM_SymbolicBurau(benchmark::State& state) {
  BraidWord w = bench_word(static_cast<int>(state.range(0)), 4 * static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_symbolic(unreduced_burau(w)));
}

void BM_Maslov(benchmark::State& state) {
  cli::Rng rng(18);
  auto T = cli::random_isotropic_triple(rng, static_cast<int>(state.range(0)));
  auto d = static_cast<MaslovDefinition>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(maslov(T, d));
}

void BM_Meyer(benchmark::State& state) {
  cli::Rng rng(19);
  auto p = cli::random_unitary_pair(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(meyer(p.xi, p.g1, p.g2));
}

void BM_CoverForm(benchmark::State& state) {
  Coloring c = Coloring::parse("1,2,1");
  TorusPoint w({{1, 3}, {static_cast<long long>(1), state.range(0)}});
  for (auto _ : state) {
    FatGraphCover cov = build_cover(c, w);
    benchmark::DoNotOptimize(eigenspace_form<cx64>(cov));
  }
}

}  // namespace

BENCHMARK(BM_BurauMatrix<cx64>)->DenseRange(3, 9, 3);
BENCHMARK(BM_BurauMatrix<cx128>)->DenseRange(3, 9, 3);
BENCHMARK(BM_BurauMatrix<cx256>)->DenseRange(3, 9, 3);
BENCHMARK(BM_BraidSignature<cx64>)->RangeMultiplier(2)->Range(4, 64)->Complexity();
BENCHMARK(BM_BraidSignature<cx128>)->RangeMultiplier(2)->Range(4, 64)->Complexity();
BENCHMARK(BM_SeifertSignature)->RangeMultiplier(2)->Range(4, 64)->Complexity();
BENCHMARK(BM_SymbolicBurau)->DenseRange(3, 6, 1);
BENCHMARK(BM_Maslov)->ArgsProduct({{4, 8}, {0, 1, 2}});
BENCHMARK(BM_Meyer)->DenseRange(2, 8, 2);
BENCHMARK(BM_CoverForm)->Arg(5)->Arg(7)->Arg(11);

BENCHMARK_MAIN();
