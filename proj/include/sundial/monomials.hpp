#pragma once

#include <vector>

#include "sundial/field.hpp"

/*
  Degree-d monomials in n+1 variables and the row-builders that turn
  geometric conditions into matrix rows.  A monomial is its exponent vector
  (length n+1, entries summing to d); the basis is enumerated in graded-lex
  order with x0 > x1 > ... > xn, so it starts at x0^d and ends at xn^d and
  is identical across runs.  Enumeration is an iterative successor walk.
*/

namespace sundial {

using Monomial = std::vector<unsigned>;

struct MonomialBasis {
  unsigned n = 0;  // ambient projective dimension
  unsigned d = 0;  // degree
  std::vector<Monomial> exponents;

  std::size_t size() const noexcept { return exponents.size(); }
};

// All C(d+n, n) degree-d monomials in x0..xn; throws InvalidDimension if n < 1.
MonomialBasis monomial_basis(unsigned n, unsigned d);

// Row of m(P) over all basis monomials m.  P has n+1 coordinates.
std::vector<FieldElement> evaluation_row(const MonomialBasis& b,
                                         const std::vector<FieldElement>& point,
                                         const PrimeField& f);

// Row of the directional derivative sum_i v_i (dm/dx_i)(P) over all basis
// monomials m.  By the Euler identity, direction = P gives d * evaluation.
std::vector<FieldElement> derivative_row(const MonomialBasis& b,
                                         const std::vector<FieldElement>& point,
                                         const std::vector<FieldElement>& direction,
                                         const PrimeField& f);

}  // namespace sundial
