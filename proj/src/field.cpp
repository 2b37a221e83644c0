#include "sundial/field.hpp"

#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sundial {

/* ---------------------------------------------------------------- Prime */

Prime::Prime(std::uint32_t value) : value_(value) {
  if (value < 2) throw InvalidPrime("prime must be >= 2");
  for (std::uint64_t q = 2; q * q <= value; ++q) {
    if (value % q == 0) throw InvalidPrime("composite modulus");
  }
}

/* ----------------------------------------------------------- PrimeField */

PrimeField::PrimeField(Prime p) : p_(p.value()) {
  // The Barrett quotient floor(x * floor(2^35/p) >> 35) needs
  // floor(2^35/p) to fit in 32 bits and x < 2^31, which holds for the axpy
  // inputs whenever 8 < p < 2^15.  Outside that window fall back to u64 %.
  barrett_ = (p_ > 8 && p_ < (1u << 15)) ? static_cast<std::uint32_t>((1ull << 35) / p_) : 0;
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
  std::uint64_t base = a % p_, acc = 1 % p_;
  for (; e; e >>= 1) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
  }
  return static_cast<FieldElement>(acc);
}

FieldElement PrimeField::inv(FieldElement a) const {
  a %= p_;
  if (a == 0) throw ZeroInverse("inverse of zero");
  return pow(a, p_ - 2);  // Fermat
}

std::optional<FieldElement> PrimeField::sqrt(FieldElement a) const {
  a %= p_;
  if (a == 0) return 0u;
  if (p_ == 2) return a;
  if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;  // non-residue
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);

  // Tonelli–Shanks for p = 1 (mod 4): p - 1 = q * 2^s with q odd.
  std::uint32_t q = p_ - 1, s = 0;
  while ((q & 1) == 0) { q >>= 1; ++s; }
  FieldElement z = 2;
  while (pow(z, (p_ - 1) / 2) == 1) ++z;  // any non-residue
  FieldElement m = s;
  FieldElement c = pow(z, q);
  FieldElement t = pow(a, q);
  FieldElement r = pow(a, (q + 1) / 2);
  while (t != 1) {
    std::uint32_t i = 0;
    FieldElement tt = t;
    while (tt != 1) { tt = mul(tt, tt); ++i; }
    FieldElement b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

void PrimeField::axpy(FieldElement* row, const FieldElement* src, std::size_t len,
                      FieldElement c) const {
  if (c == 0) return;
  if (barrett_) {
    const std::uint32_t p = p_, mu = barrett_;
    for (std::size_t j = 0; j < len; ++j) {
      // x < p + p*p < 2^31 for p < 2^15, so the 35-bit Barrett step is exact
      // up to one conditional subtract.
      std::uint32_t x = row[j] + c * src[j];
      std::uint32_t qd = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * mu) >> 35);
      x -= qd * p;
      if (x >= p) x -= p;
      row[j] = x;
    }
  } else {
    for (std::size_t j = 0; j < len; ++j) {
      std::uint64_t x = row[j] + static_cast<std::uint64_t>(c) * src[j];
      row[j] = static_cast<FieldElement>(x % p_);
    }
  }
}

void PrimeField::scale(FieldElement* row, std::size_t len, FieldElement c) const {
  for (std::size_t j = 0; j < len; ++j)
    row[j] = mul(row[j], c);
}

/* ----------------------------------------------------------------- rank */

namespace {

// Shared pivot search: first row at or below `top` with a nonzero in the
// leftmost nonzero column.  Returns {row, col} or cols when exhausted.
std::pair<std::size_t, std::size_t> find_pivot(const DenseMatrix& m, std::size_t top,
                                               std::size_t col0) {
  for (std::size_t c = col0; c < m.cols; ++c) {
    for (std::size_t r = top; r < m.rows; ++r) {
      if (m.at(r, c) != 0) return {r, c};
    }
  }
  return {m.rows, m.cols};
}

}  // namespace

std::size_t rank(DenseMatrix m, const PrimeField& f) {
  std::size_t rk = 0, col = 0;
  while (rk < m.rows && col < m.cols) {
    auto [pr, pc] = find_pivot(m, rk, col);
    if (pc == m.cols) break;
    col = pc;
    if (pr != rk) std::swap_ranges(m.row(pr), m.row(pr) + m.cols, m.row(rk));
    const FieldElement pinv = f.inv(m.at(rk, col));
    f.scale(m.row(rk) + col, m.cols - col, pinv);
    for (std::size_t r = rk + 1; r < m.rows; ++r) {
      FieldElement v = m.at(r, col);
      if (v) f.axpy(m.row(r) + col, m.row(rk) + col, m.cols - col, f.neg(v));
    }
    ++rk;
    ++col;
  }
  return rk;
}

std::size_t rank_parallel(DenseMatrix m, const PrimeField& f) {
  std::size_t rk = 0, col = 0;
  while (rk < m.rows && col < m.cols) {
    auto [pr, pc] = find_pivot(m, rk, col);
    if (pc == m.cols) break;
    col = pc;
    if (pr != rk) std::swap_ranges(m.row(pr), m.row(pr) + m.cols, m.row(rk));
    const FieldElement pinv = f.inv(m.at(rk, col));
    f.scale(m.row(rk) + col, m.cols - col, pinv);
    const std::size_t width = m.cols - col;
    const FieldElement* pivot_row = m.row(rk) + col;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (m.rows - rk > 64 && width > 64)
#endif
    for (std::ptrdiff_t r = static_cast<std::ptrdiff_t>(rk) + 1;
         r < static_cast<std::ptrdiff_t>(m.rows); ++r) {
      FieldElement v = m.at(static_cast<std::size_t>(r), col);
      if (v) f.axpy(m.row(static_cast<std::size_t>(r)) + col, pivot_row, width, f.neg(v));
    }
    ++rk;
    ++col;
  }
  return rk;
}

std::size_t rank_auto(DenseMatrix m, const PrimeField& f) {
#ifdef _OPENMP
  if (omp_get_max_threads() > 1 && m.rows > 64 && m.cols > 64)
    return rank_parallel(std::move(m), f);
#endif
  return rank(std::move(m), f);
}

/* ---------------------------------------------------------- EchelonForm */

EchelonForm::EchelonForm(std::size_t cols, const PrimeField& f)
    : cols_(cols), f_(&f), pivot_row_(cols, -1) {}

bool EchelonForm::insert(std::vector<FieldElement> row) {
  if (row.size() != cols_) throw DimensionMismatch("row width != echelon width");
  for (std::size_t c = 0; c < cols_; ++c) {
    FieldElement v = row[c];
    if (v == 0) continue;
    std::int32_t pr = pivot_row_[c];
    if (pr < 0) {
      f_->scale(row.data() + c, cols_ - c, f_->inv(v));
      pivot_row_[c] = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    f_->axpy(row.data() + c, rows_[static_cast<std::size_t>(pr)].data() + c, cols_ - c,
             f_->neg(v));
  }
  return false;
}

}  // namespace sundial
