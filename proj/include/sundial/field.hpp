#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sundial/errors.hpp"

/*
  Exact arithmetic in the prime field F_p and dense matrix rank — the
  computational kernel behind every dimension count in the engine.

  Elements are residues in [0, p) stored as uint32_t.  Rank is computed by
  fraction-free Gaussian elimination with partial pivoting by first nonzero;
  there is no floating point anywhere.  Two rank kernels are provided: a
  plain serial one (the reference used by tests) and an OpenMP row-parallel
  one; `benchmarks/rank_bench.cpp` compares them.
*/

namespace sundial {

using FieldElement = std::uint32_t;

// A positive integer asserted prime (checked by trial division).
class Prime {
 public:
  explicit Prime(std::uint32_t value);
  std::uint32_t value() const noexcept { return value_; }

 private:
  std::uint32_t value_;
};

// Arithmetic context modulo a fixed prime.  Precomputes the Barrett constant
// used by the elimination inner loop when p < 2^15 (the default 32003 is).
class PrimeField {
 public:
  explicit PrimeField(Prime p);

  std::uint32_t p() const noexcept { return p_; }

  FieldElement reduce(std::uint64_t x) const { return static_cast<FieldElement>(x % p_); }
  FieldElement add(FieldElement a, FieldElement b) const {
    FieldElement s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  FieldElement neg(FieldElement a) const { return a == 0 ? 0 : p_ - a; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // multiplicative inverse; throws ZeroInverse on 0
  FieldElement inv(FieldElement a) const;
  // square root mod p when it exists (Tonelli–Shanks; fast path p % 4 == 3)
  std::optional<FieldElement> sqrt(FieldElement a) const;

  // row[j] <- row[j] + c * src[j] (mod p) for j in [0, len): the elimination
  // inner loop, Barrett-reduced when the prime allows it.
  void axpy(FieldElement* row, const FieldElement* src, std::size_t len,
            FieldElement c) const;
  // row[j] <- c * row[j] (mod p)
  void scale(FieldElement* row, std::size_t len, FieldElement c) const;

 private:
  std::uint32_t p_;
  std::uint32_t barrett_;  // floor(2^35 / p) when 8 < p < 2^15, else 0
};

// Dense row-major matrix of residues.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FieldElement> entries;  // rows * cols

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  FieldElement& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  FieldElement at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  FieldElement* row(std::size_t r) { return entries.data() + r * cols; }
  const FieldElement* row(std::size_t r) const { return entries.data() + r * cols; }
};

// Row rank over F_p.  `rank` is the serial reference; `rank_parallel` splits
// the row-update step across OpenMP threads and returns the same value.
// `rank_auto` is the production entry point: it dispatches to the parallel
// kernel when the matrix is large enough for the split to pay for itself and
// more than one thread is available, and to the reference otherwise.
std::size_t rank(DenseMatrix m, const PrimeField& f);
std::size_t rank_parallel(DenseMatrix m, const PrimeField& f);
std::size_t rank_auto(DenseMatrix m, const PrimeField& f);

// Incremental reduced echelon form: rows are inserted one at a time and the
// rank is available after every insertion.  Used by sweep drivers to share
// elimination work between nested scheme instances.
class EchelonForm {
 public:
  EchelonForm(std::size_t cols, const PrimeField& f);

  // Reduces `row` against the current basis; absorbs it as a new pivot row
  // and returns true if it is independent, returns false otherwise.
  bool insert(std::vector<FieldElement> row);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

 private:
  std::size_t cols_;
  const PrimeField* f_;
  std::vector<std::vector<FieldElement>> rows_;  // each with leading 1
  std::vector<std::int32_t> pivot_row_;          // column -> index into rows_, -1 if none
};

}  // namespace sundial
