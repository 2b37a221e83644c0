#pragma once

#include <cstdint>
#include <vector>

#include "sundial/field.hpp"

/*
  Grid verification driver.  For every (n, d) in a rectangle and every
  sundial/line count (s, l) with 2s + l <= t + 1 (t the quotient of the
  monomial count by d+1), a generic configuration is drawn and the exact
  degree-d ideal dimension is compared against the closed form.

  Cells inside one (n, d) block share a component pool: an incremental
  echelon form is extended one sundial at a time, and for each s a copy is
  extended one line at a time, so the whole block costs one elimination
  instead of one per cell.  A cell whose pooled evaluation mismatches is
  retried standalone with fresh, per-cell-seeded draws up to max_trials;
  genuine counterexamples are the only way a cell stays mismatched.

  Blocks are distributed over an OpenMP pool; every block's stream is seeded
  by (seed, n, d) alone, so results are identical for any thread count and
  cells are always reported in grid order (n asc, d asc, s asc, l asc).
*/

namespace sundial {

struct SweepCell {
  unsigned n = 0, d = 0;
  std::uint64_t s = 0, l = 0;
  std::uint64_t expected_dim = 0;
  std::uint64_t computed_dim = 0;
  bool match = false;
  unsigned trial = 0;    // 1 = shared-pool evaluation, >1 = standalone retry
  double elapsed_ms = 0;  // marginal elimination work for this cell + retries
};

struct SweepResult {
  std::vector<SweepCell> cells;  // grid order: n asc, d asc, s asc, l asc
  std::uint64_t mismatches() const;
  bool all_match() const { return mismatches() == 0; }
};

// pre: 3 <= n_lo <= n_hi, 1 <= d_lo <= d_hi, f.p() >= d_hi + 2,
// max_trials >= 1.  threads = 0 leaves the OpenMP default in place.
SweepResult sweep_grid(unsigned n_lo, unsigned n_hi, unsigned d_lo, unsigned d_hi,
                       const PrimeField& f, std::uint64_t seed, unsigned max_trials,
                       unsigned threads = 0);

}  // namespace sundial
