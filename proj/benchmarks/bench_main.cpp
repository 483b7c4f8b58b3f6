#include <benchmark/benchmark.h>

#include <random>

#include "support/oracles.hpp"
#include "torelli/drags.hpp"
#include "torelli/lattice.hpp"
#include "torelli/magnus.hpp"
#include "torelli/rewriter.hpp"

using namespace torelli;

namespace {

  void BM_Rho(benchmark::State& state) {
    std::mt19937_64 rng(1);
    auto const      len = static_cast<std::size_t>(state.range(0)) / 4;
    Word const      w   = comm(oracle::random_word(rng, 4, len, len), oracle::random_word(rng, 4, len, len));
    for (auto _ : state) {
      benchmark::DoNotOptimize(rho(w));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(BM_Rho)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

  void BM_RealizeAndTau(benchmark::State& state) {
    PartitionConfig const c{3, 3, {{1, 2}, {3}}};
    CappedBasis const     basis(c);
    auto const            gens = all_generators(c);
    for (auto _ : state) {
      for (auto const& g : gens) {
        benchmark::DoNotOptimize(tau(realize(basis, g)));
      }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(gens.size()));
  }
  BENCHMARK(BM_RealizeAndTau);

  void BM_TomaszewskiFactor(benchmark::State& state) {
    std::mt19937_64 rng(2);
    auto const      len = static_cast<std::size_t>(state.range(0));
    Word const      w   = oracle::random_commutator_word(rng, 3, len);
    for (auto _ : state) {
      benchmark::DoNotOptimize(tomaszewski_factor(w));
    }
  }
  BENCHMARK(BM_TomaszewskiFactor)->Arg(8)->Arg(16)->Arg(24)->Arg(48);

  void BM_Snf(benchmark::State& state) {
    std::mt19937_64 rng(3);
    auto const      n = static_cast<std::size_t>(state.range(0));
    IntMatrix       a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = static_cast<long>(rng() % 21) - 10;
      }
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(snf(a));
    }
  }
  BENCHMARK(BM_Snf)->DenseRange(4, 16, 4);

  void BM_FsGraph(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(fs_graph(n, 1));
    }
  }
  BENCHMARK(BM_FsGraph)->DenseRange(2, 4);

  void BM_AbelianizationRank(benchmark::State& state) {
    PartitionConfig const c{3, 3, {{1}, {2}, {3}}};
    for (auto _ : state) {
      benchmark::DoNotOptimize(abelianization_rank(c));
    }
  }
  BENCHMARK(BM_AbelianizationRank);

}  // namespace

BENCHMARK_MAIN();
