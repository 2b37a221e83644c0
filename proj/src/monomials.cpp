#include "sundial/monomials.hpp"

#include <algorithm>

namespace sundial {

namespace {

// Power table pows[i][k] = point[i]^k for k = 0..d (0^0 = 1).
std::vector<std::vector<FieldElement>> power_table(const std::vector<FieldElement>& point,
                                                   unsigned d, const PrimeField& f) {
  std::vector<std::vector<FieldElement>> pows(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    pows[i].resize(d + 1);
    pows[i][0] = 1;
    for (unsigned k = 1; k <= d; ++k) pows[i][k] = f.mul(pows[i][k - 1], point[i]);
  }
  return pows;
}

}  // namespace

MonomialBasis monomial_basis(unsigned n, unsigned d) {
  if (n < 1) throw InvalidDimension("ambient dimension must be >= 1");
  MonomialBasis b;
  b.n = n;
  b.d = d;
  Monomial e(n + 1, 0);
  e[0] = d;
  b.exponents.push_back(e);
  // Successor walk from x0^d down to xn^d: decrement the rightmost nonzero
  // exponent among x0..x_{n-1} and fold everything to its right into the
  // next position.
  for (;;) {
    std::size_t j = n;
    while (j > 0 && e[j - 1] == 0) --j;
    if (j == 0) break;  // only xn^d remains nonzero: done
    --j;                // rightmost nonzero among positions 0..n-1
    unsigned tail = e[n];
    e[j] -= 1;
    if (j + 1 == n) {
      e[n] = tail + 1;
    } else {
      e[j + 1] = tail + 1;
      e[n] = 0;
    }
    b.exponents.push_back(e);
  }
  return b;
}

std::vector<FieldElement> evaluation_row(const MonomialBasis& b,
                                         const std::vector<FieldElement>& point,
                                         const PrimeField& f) {
  if (point.size() != b.n + 1) throw DimensionMismatch("point has wrong coordinate count");
  auto pows = power_table(point, b.d, f);
  std::vector<FieldElement> row(b.size());
  for (std::size_t m = 0; m < b.size(); ++m) {
    FieldElement v = 1;
    const Monomial& e = b.exponents[m];
    for (std::size_t i = 0; i <= b.n && v != 0; ++i)
      if (e[i]) v = f.mul(v, pows[i][e[i]]);
    row[m] = v;
  }
  return row;
}

std::vector<FieldElement> derivative_row(const MonomialBasis& b,
                                         const std::vector<FieldElement>& point,
                                         const std::vector<FieldElement>& direction,
                                         const PrimeField& f) {
  if (point.size() != b.n + 1 || direction.size() != b.n + 1)
    throw DimensionMismatch("point or direction has wrong coordinate count");
  auto pows = power_table(point, b.d, f);
  std::vector<FieldElement> row(b.size());
  for (std::size_t m = 0; m < b.size(); ++m) {
    const Monomial& e = b.exponents[m];
    FieldElement acc = 0;
    for (std::size_t i = 0; i <= b.n; ++i) {
      if (e[i] == 0 || direction[i] == 0) continue;
      // v_i * e_i * prod_j P_j^(e_j - [j==i])
      FieldElement term = f.mul(direction[i], f.reduce(e[i]));
      for (std::size_t j = 0; j <= b.n && term != 0; ++j) {
        unsigned k = e[j] - (j == i ? 1 : 0);
        if (k) term = f.mul(term, pows[j][k]);
      }
      acc = f.add(acc, term);
    }
    row[m] = acc;
  }
  return row;
}

}  // namespace sundial
