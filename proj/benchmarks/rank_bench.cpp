// Compares the serial reference rank kernel against the OpenMP row-parallel
// one on random square matrices and on realistic condition matrices, and
// measures what the sweep's incremental echelon strategy saves over
// re-eliminating every nested instance from scratch.

#include <benchmark/benchmark.h>

#include "sundial/counting.hpp"
#include "sundial/field.hpp"
#include "sundial/rng.hpp"
#include "sundial/scheme.hpp"

namespace {

using namespace sundial;

const PrimeField F(Prime(32003));

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  DenseMatrix m(rows, cols);
  Rng rng(seed);
  for (auto& e : m.entries) e = rng.below(F.p());
  return m;
}

// The degree-d condition matrix of the critical scheme W in P^n: the matrix
// shape every verification in the engine reduces to.
DenseMatrix critical_matrix(unsigned n, unsigned d) {
  Rng rng(derive_seed(1, {n, d}));
  CriticalSchemes cs = build_W_T(n, d, F, rng);
  return condition_matrix(cs.W, d, F).matrix;
}

void BM_RankSerial(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  DenseMatrix m = random_matrix(size, size, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, F));
  state.SetItemsProcessed(state.iterations() * size * size);
}

void BM_RankParallel(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  DenseMatrix m = random_matrix(size, size, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank_parallel(m, F));
  state.SetItemsProcessed(state.iterations() * size * size);
}

void BM_CriticalSerial(benchmark::State& state) {
  DenseMatrix m = critical_matrix(static_cast<unsigned>(state.range(0)),
                                  static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, F));
}

void BM_CriticalParallel(benchmark::State& state) {
  DenseMatrix m = critical_matrix(static_cast<unsigned>(state.range(0)),
                                  static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rank_parallel(m, F));
}

// One (n, d) sweep block the naive way: every (s, l) cell eliminated from
// scratch.
void BM_BlockFromScratch(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const unsigned d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    Rng rng(derive_seed(3, {n, d}));
    const std::uint64_t t = compute_trs(n, d).t;
    std::uint64_t sink = 0;
    for (std::uint64_t s = 0; 2 * s <= t + 1; ++s)
      for (std::uint64_t l = 0; 2 * s + l <= t + 1; ++l) {
        Rng cell_rng(derive_seed(3, {n, d, s, l}));
        Scheme X = random_configuration(n, static_cast<unsigned>(s),
                                        static_cast<unsigned>(l), F, cell_rng);
        sink += ideal_dimension(X, d, F);
      }
    benchmark::DoNotOptimize(sink);
  }
}

// The same block through one shared incremental echelon form per s, as the
// sweep driver does it.
void BM_BlockChained(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const unsigned d = static_cast<unsigned>(state.range(1));
  const MonomialBasis basis = monomial_basis(n, d);
  for (auto _ : state) {
    Rng rng(derive_seed(3, {n, d}));
    const std::uint64_t t = compute_trs(n, d).t;
    std::vector<std::vector<std::vector<FieldElement>>> line_rows;
    for (std::uint64_t j = 0; j < t + 1; ++j)
      line_rows.push_back(
          component_rows(LineComponent{make_generic_line(n, F, rng)}, basis, F));
    std::uint64_t sink = 0;
    EchelonForm base(basis.size(), F);
    for (std::uint64_t s = 0; 2 * s <= t + 1; ++s) {
      if (s > 0)
        for (auto& row : component_rows(
                 SundialComponent{make_generic_sundial(n, F, rng)}, basis, F))
          base.insert(std::move(row));
      EchelonForm chain = base;
      for (std::uint64_t l = 0; 2 * s + l <= t + 1; ++l) {
        if (l > 0)
          for (const auto& row : line_rows[l - 1]) chain.insert(row);
        sink += basis.size() - chain.rank();
      }
    }
    benchmark::DoNotOptimize(sink);
  }
}

BENCHMARK(BM_RankSerial)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_RankParallel)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_CriticalSerial)->Args({4, 6})->Args({5, 6});
BENCHMARK(BM_CriticalParallel)->Args({4, 6})->Args({5, 6});
BENCHMARK(BM_BlockFromScratch)->Args({4, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockChained)->Args({4, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
