#include "sundial/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <utility>

#include "sundial/counting.hpp"
#include "sundial/errors.hpp"
#include "sundial/geometry.hpp"
#include "sundial/monomials.hpp"
#include "sundial/rng.hpp"
#include "sundial/scheme.hpp"

namespace sundial {

namespace {

// Fresh, independently seeded draws for a cell whose pooled evaluation
// mismatched.  Each trial's stream depends only on (seed, cell, trial), so a
// retry gives the same answer no matter which thread runs it.
void retry_standalone(SweepCell& cell, const PrimeField& f, std::uint64_t seed,
                      unsigned max_trials) {
  for (unsigned trial = 2; trial <= max_trials && !cell.match; ++trial) {
    Rng rng(derive_seed(seed, {cell.n, cell.d, cell.s, cell.l, trial}));
    Scheme X = random_configuration(cell.n, static_cast<unsigned>(cell.s),
                                    static_cast<unsigned>(cell.l), f, rng);
    cell.computed_dim = ideal_dimension(X, cell.d, f);
    cell.trial = trial;
    cell.match = cell.computed_dim == cell.expected_dim;
  }
}

std::vector<SweepCell> sweep_block(unsigned n, unsigned d, const PrimeField& f,
                                   std::uint64_t seed, unsigned max_trials) {
  const MonomialBasis basis = monomial_basis(n, d);
  const std::uint64_t num_monomials = basis.size();
  const std::uint64_t t = compute_trs(n, d).t;
  const std::uint64_t s_max = (t + 1) / 2;

  Rng rng(derive_seed(seed, {n, d, 1}));
  std::vector<SundialComponent> sundials;
  sundials.reserve(s_max);
  for (std::uint64_t i = 0; i < s_max; ++i)
    sundials.push_back(SundialComponent{make_generic_sundial(n, f, rng)});
  std::vector<std::vector<std::vector<FieldElement>>> line_rows;
  line_rows.reserve(t + 1);
  for (std::uint64_t j = 0; j < t + 1; ++j)
    line_rows.push_back(
        component_rows(LineComponent{make_generic_line(n, f, rng)}, basis, f));

  std::vector<SweepCell> cells;
  EchelonForm base(num_monomials, f);
  for (std::uint64_t s = 0; s <= s_max; ++s) {
    const auto block_clock = std::chrono::steady_clock::now();
    if (s > 0)
      for (auto& row : component_rows(sundials[s - 1], basis, f))
        base.insert(std::move(row));
    EchelonForm chain = base;
    const std::uint64_t l_max = t + 1 - 2 * s;
    for (std::uint64_t l = 0; l <= l_max; ++l) {
      const auto cell_clock = l == 0 ? block_clock : std::chrono::steady_clock::now();
      if (l > 0)
        for (const auto& row : line_rows[l - 1]) chain.insert(row);
      SweepCell cell;
      cell.n = n;
      cell.d = d;
      cell.s = s;
      cell.l = l;
      cell.expected_dim = expected_ideal_dim(n, d, s, l);
      cell.computed_dim = num_monomials - chain.rank();
      cell.trial = 1;
      cell.match = cell.computed_dim == cell.expected_dim;
      if (!cell.match) retry_standalone(cell, f, seed, max_trials);
      cell.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - cell_clock)
                            .count();
      cells.push_back(cell);
    }
  }
  return cells;
}

}  // namespace

std::uint64_t SweepResult::mismatches() const {
  std::uint64_t bad = 0;
  for (const SweepCell& c : cells)
    if (!c.match) ++bad;
  return bad;
}

SweepResult sweep_grid(unsigned n_lo, unsigned n_hi, unsigned d_lo, unsigned d_hi,
                       const PrimeField& f, std::uint64_t seed, unsigned max_trials,
                       unsigned threads) {
  if (n_lo < 3) throw InvalidDimension("sweep requires ambient dimension >= 3");
  if (d_lo < 1) throw InvalidDimension("sweep requires degree >= 1");
  if (n_hi < n_lo || d_hi < d_lo) throw EmptyInput("sweep range is empty");
  if (f.p() < d_hi + 2)
    throw PrimeTooSmall("prime must be at least the largest degree plus 2");
  if (max_trials < 1) throw EmptyInput("at least one trial is required");

  std::vector<std::pair<unsigned, unsigned>> blocks;
  for (unsigned n = n_lo; n <= n_hi; ++n)
    for (unsigned d = d_lo; d <= d_hi; ++d) blocks.emplace_back(n, d);

  std::vector<std::vector<SweepCell>> per_block(blocks.size());
  const int team = threads > 0 ? static_cast<int>(threads) : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (std::size_t i = 0; i < blocks.size(); ++i)
    per_block[i] =
        sweep_block(blocks[i].first, blocks[i].second, f, seed, max_trials);

  SweepResult result;
  for (auto& cells : per_block)
    result.cells.insert(result.cells.end(), cells.begin(), cells.end());
  return result;
}

}  // namespace sundial
